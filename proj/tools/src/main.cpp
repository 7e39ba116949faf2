#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return slope_kernel::cli::run(argc, argv, std::cout, std::cerr); }
