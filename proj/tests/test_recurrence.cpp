#include "slope_kernel/enumerate.hpp"
#include "slope_kernel/recurrence.hpp"

#include <gtest/gtest.h>

namespace sk = slope_kernel;
using sk::BigInt;
using sk::Rational;

namespace {

std::vector<BigInt> knuth_combination(int count, int wa, int wb) {
  std::vector<BigInt> out;
  for (const auto& c : sk::knuth_AB_sequence(count)) {
    out.push_back(wa * c.a + wb * c.b);
  }
  return out;
}

}  // namespace

TEST(Guess, ConstantSequence) {
  const std::vector<BigInt> ones(40, BigInt(7));
  const auto r = sk::guess_precurrence(ones, {2, 2, 0});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->order, 1);
  EXPECT_EQ(r->degree, 0);
  EXPECT_TRUE(r->holds_on(ones));
}

TEST(Guess, Fibonacci) {
  std::vector<BigInt> f{0, 1};
  while (f.size() < 40) {
    f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  }
  const auto r = sk::guess_precurrence(f, {3, 1, 0});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->order, 2);
  EXPECT_EQ(r->degree, 0);
  EXPECT_EQ(r->predict(f, 10), Rational(f[12]));
}

TEST(Guess, Factorial) {
  std::vector<BigInt> f{1};
  for (int n = 1; n < 40; ++n) {
    f.push_back(f.back() * n);
  }
  const auto r = sk::guess_precurrence(f, {2, 2, 0});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->order, 1);
  EXPECT_EQ(r->degree, 1);
  EXPECT_EQ(r->c(0, 5), Rational(1));
  EXPECT_EQ(r->c(1, 5), Rational(6));
}

TEST(Guess, InsufficientTerms) {
  const std::vector<BigInt> few(5, BigInt(1));
  EXPECT_THROW(sk::guess_precurrence(few, {2, 2, 0}), sk::InsufficientTermsError);
  EXPECT_GT(sk::required_terms(4, 30), 200u);
}

TEST(Guess, HypergeometricSum) {
  const auto seq = knuth_combination(30, 1, 1);
  const auto r = sk::guess_precurrence(seq, {1, 6, 1});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->order, 1);
  EXPECT_EQ(r->degree, 6);
  // Leading coefficients of c_1 / c_0 give the growth rate 823543/12500.
  EXPECT_EQ(r->coeffs[1][6] / r->coeffs[0][6], Rational(823543, 12500));
  EXPECT_TRUE(r->holds_on(seq));
}

TEST(Guess, PerturbedTailIsRejected) {
  auto seq = knuth_combination(30, 1, 1);
  seq.back() += 1;
  EXPECT_FALSE(sk::guess_precurrence(seq, {1, 6, 1}).has_value());
}

TEST(Guess, ComponentHasNoSmallRecurrence) {
  const auto seq = knuth_combination(90, 1, 0);
  EXPECT_FALSE(sk::guess_precurrence(seq, {4, 8, 1}).has_value());
}

TEST(Guess, FourAMinusBHasOrderFour) {
  const auto seq = knuth_combination(250, 4, -1);
  const auto none = sk::guess_precurrence(seq, {3, 30, 1});
  EXPECT_FALSE(none.has_value());
  const auto r = sk::guess_precurrence(seq, {4, 30, 1});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->order, 4);
  EXPECT_TRUE(r->holds_on(seq));
}
