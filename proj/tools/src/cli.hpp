#pragma once

#include <iosfwd>

namespace slope_kernel::cli {

// Entry point of the slope-kernel tool. Exit codes: 0 success, 1 failed
// verification or numerical error, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace slope_kernel::cli
