#include "cli.hpp"

#include <gtest/gtest.h>
#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "slope-kernel");
  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code = slope_kernel::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, KnuthSingleIndex) {
  const auto r = run({"knuth", "--n", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "slope-kernel/1");
  EXPECT_EQ(j["A"], "3");
  EXPECT_EQ(j["B"], "2");
  EXPECT_EQ(j["A_plus_B"], "5");
}

TEST(Cli, KnuthCsvColumn) {
  const auto r = run({"knuth", "--n-max", "3", "--csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "n,value\n1,5\n2,110\n3,3876\n");
}

TEST(Cli, CountCsv) {
  const auto r = run({"count", "--n-max", "2", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("n,k,count\n0,0,1\n", 0), 0u);
}

TEST(Cli, SeriesShape) {
  const auto r = run({"series", "G1", "--order", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["variable"], "z");
  ASSERT_EQ(j["coeffs"].size(), 7u);
  EXPECT_EQ(j["coeffs"][5][0], "3");
  EXPECT_EQ(j["coeffs"][5][1], "1");
}

TEST(Cli, Constants) {
  const auto r = run({"constants", "--precision", "128"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["kappa1"].get<std::string>().rfind("1.6302576629903501404", 0), 0u);
  EXPECT_EQ(j["precision_bits"], 128);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run({"verify", "--identity", "aplusb", "--n-max", "20"}).code, 0);
  EXPECT_EQ(run({"verify", "--identity", "thm61", "--a", "2", "--c", "5", "--s-max", "3"}).code, 0);
  EXPECT_EQ(run({"verify", "--identity", "bogus"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"count", "--jumps", "+5:x"}).code, 2);
  EXPECT_EQ(run({"knuth", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"constants", "--precision", "16"}).code, 2);
}

TEST(Cli, PrecisionFromEnvironmentAndFlag) {
  ::setenv("SLOPE_KERNEL_PRECISION", "128", 1);
  const auto env = nlohmann::json::parse(run({"constants"}).out);
  EXPECT_EQ(env["precision_bits"], 128);
  const auto flag = nlohmann::json::parse(run({"constants", "--precision", "160"}).out);
  EXPECT_EQ(flag["precision_bits"], 160);
  ::setenv("SLOPE_KERNEL_PRECISION", "abc", 1);
  EXPECT_EQ(run({"constants"}).code, 2);
  ::unsetenv("SLOPE_KERNEL_PRECISION");
}

TEST(Cli, GuessRecurrenceFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "slope_kernel_cli_seq.txt";
  {
    std::ofstream f(path);
    std::vector<long> fib{0, 1};
    while (fib.size() < 60) {
      fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
    }
    for (long v : fib) {
      f << v << "\n";
    }
  }
  const auto r = run({"guess-rec", path.string(), "--max-order", "2", "--max-degree", "1", "--offset", "0"});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["found"], true);
  EXPECT_EQ(j["recurrence"]["order"], 2);
  EXPECT_EQ(run({"guess-rec", "/nonexistent/file"}).code, 2);
}

TEST(Cli, Deterministic) {
  const auto a = run({"duchon", "--n-max", "30"});
  const auto b = run({"duchon", "--n-max", "30"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}
