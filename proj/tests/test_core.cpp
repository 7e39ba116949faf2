#include "oracles.hpp"

#include "slope_kernel/arith.hpp"
#include "slope_kernel/jump_set.hpp"
#include "slope_kernel/numeric.hpp"
#include "slope_kernel/real.hpp"
#include "slope_kernel/series.hpp"

#include <gtest/gtest.h>

#include <random>

namespace sk = slope_kernel;
using sk::BigInt;
using sk::Complex;
using sk::Rational;
using sk::Real;
using sk::TruncSeries;

TEST(Binomial, MatchesPascalTriangle) {
  const auto t = oracle::pascal(200);
  for (unsigned long n = 0; n <= 200; ++n) {
    for (unsigned long k = 0; k <= n; ++k) {
      ASSERT_EQ(sk::binomial(n, k), t[n][k]) << n << " " << k;
    }
  }
}

TEST(Binomial, PascalIdentity) {
  for (unsigned long n = 1; n <= 200; ++n) {
    for (unsigned long k = 1; k <= n; ++k) {
      ASSERT_EQ(sk::binomial(n, k), sk::binomial(n - 1, k - 1) + sk::binomial(n - 1, k));
    }
  }
  EXPECT_EQ(sk::binomial(5, 7), 0);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(sk::parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(sk::parse_rational("+7"), Rational(7));
  EXPECT_EQ(sk::to_string(sk::make_rational(10, 4)), "5/2");
  EXPECT_THROW(sk::parse_rational("1/0"), std::domain_error);
  EXPECT_THROW(sk::parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(sk::make_rational(1, 0), std::domain_error);
}

TEST(JumpSet, ParseForms) {
  const sk::JumpSet j = sk::JumpSet::parse("+5:1,-2:1");
  EXPECT_EQ(j, sk::knuth_jumps());
  EXPECT_EQ(j.min_delta(), -2);
  EXPECT_EQ(j.max_delta(), 5);
  EXPECT_TRUE(j.unit_weights());
  const sk::JumpSet w = sk::JumpSet::parse("+1:1/2,-1");
  EXPECT_EQ(w.weight_of(1), Rational(1, 2));
  EXPECT_EQ(w.weight_of(-1), Rational(1));
  EXPECT_EQ(w.weight_of(3), Rational(0));
  EXPECT_FALSE(w.unit_weights());
}

TEST(JumpSet, RejectsBadInput) {
  EXPECT_THROW(sk::JumpSet::parse("+1,+2"), std::invalid_argument);  // no negative jump
  EXPECT_THROW(sk::JumpSet::parse("-1,-2"), std::invalid_argument);
  EXPECT_THROW(sk::JumpSet::parse("+1,+1,-1"), std::invalid_argument);
  EXPECT_THROW(sk::JumpSet::parse("+1:0,-1"), std::invalid_argument);
  EXPECT_THROW(sk::JumpSet::parse("+1:x,-1"), std::invalid_argument);
  EXPECT_THROW(sk::JumpSet::parse(""), std::invalid_argument);
}

TEST(JumpSet, Period) {
  EXPECT_EQ(sk::knuth_jumps().period(), 7);
  EXPECT_EQ(sk::duchon_jumps().period(), 5);
  EXPECT_EQ(sk::JumpSet::unit({-1, 1}).period(), 2);
  EXPECT_EQ(sk::JumpSet::unit({-1, 0, 1}).period(), 1);
}

namespace {

TruncSeries random_series(std::mt19937& rng, std::size_t order, unsigned q = 1) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<Rational> c;
  for (std::size_t i = 0; i <= order; ++i) {
    c.emplace_back(num(rng), den(rng));
    c.back().canonicalize();
  }
  return TruncSeries(q, order, c);
}

}  // namespace

TEST(TruncSeries, RingLaws) {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    const TruncSeries a = random_series(rng, 12);
    const TruncSeries b = random_series(rng, 12);
    const TruncSeries c = random_series(rng, 12);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, TruncSeries(1, 12));
    EXPECT_EQ(a * TruncSeries::constant(1, 12, 1), a);
    EXPECT_EQ(sk::series_mul(a, b), a * b);
    EXPECT_EQ(sk::series_add(a, b), a + b);
  }
}

TEST(TruncSeries, DivisionInvertsMultiplication) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const TruncSeries a = random_series(rng, 10);
    TruncSeries b = random_series(rng, 10);
    if (b[0] == 0) {
      continue;
    }
    EXPECT_EQ(sk::series_div_unit(a * b, b), a);
  }
}

TEST(TruncSeries, DivisionCancelsValuation) {
  const TruncSeries t = TruncSeries::monomial(1, 8, 1);
  const TruncSeries one_minus_t = TruncSeries::constant(1, 8, 1) - t;
  // (t^2 / (1 - t)) / t^2 = 1 / (1 - t) = 1 + t + ... to order 6.
  const TruncSeries q = sk::series_div_unit(sk::series_div_unit(t * t, one_minus_t), t * t);
  EXPECT_EQ(q.order(), 6u);
  for (std::size_t i = 0; i <= 6; ++i) {
    EXPECT_EQ(q[i], Rational(1));
  }
  EXPECT_THROW(sk::series_div_unit(TruncSeries::constant(1, 8, 1), t), std::domain_error);
  EXPECT_THROW(sk::series_div_unit(TruncSeries(1, 4), TruncSeries(2, 4)), std::invalid_argument);
}

TEST(TruncSeries, ShiftsAndDeramification) {
  TruncSeries s(2, 6, {1, 0, 3, 0, 5});
  EXPECT_EQ(s.valuation(), 0u);
  const TruncSeries z = s.deramified(2);
  EXPECT_EQ(z.ramification(), 1u);
  EXPECT_EQ(z[1], Rational(3));
  EXPECT_EQ(z[2], Rational(5));
  const TruncSeries up = s.shifted_up(1);
  EXPECT_EQ(up.order(), 7u);
  EXPECT_EQ(up[1], Rational(1));
  EXPECT_EQ(up.shifted_down(1), s);
  EXPECT_THROW(up.deramified(2), std::domain_error);
  EXPECT_EQ(TruncSeries(1, 3, {1, 2, 3, 4}).negated_variable(), TruncSeries(1, 3, {1, -2, 3, -4}));
  EXPECT_THROW(s[7], std::out_of_range);
}

TEST(TruncSeries, PowerMatchesBinomials) {
  const TruncSeries one_plus_t(1, 20, {1, 1});
  const TruncSeries p = one_plus_t.pow(20);
  for (unsigned long k = 0; k <= 20; ++k) {
    EXPECT_EQ(p[k], Rational(sk::binomial(20, k)));
  }
}

TEST(Real, ArithmeticAndFormatting) {
  const Real two(2, 256);
  EXPECT_EQ(sk::sqrt(two) * sk::sqrt(two) - two < Real::from_string("1e-70", 256), true);
  EXPECT_EQ(Real(Rational(1, 4), 128).to_string(5), "0.25000");
  EXPECT_EQ(sk::pi(128).to_string(10), "3.141592654");
  EXPECT_THROW(Real::from_string("nope", 128), std::invalid_argument);
  EXPECT_EQ(sk::root(Real(-8, 128), 3).to_string(5), "-2.0000");
}

TEST(Complex, RootsOfUnity) {
  const Complex w = Complex::root_of_unity(1, 7, 256);
  const Complex w7 = sk::pow(w, 7);
  EXPECT_LT(sk::abs(w7 - Complex(1, 0, 256)), Real::from_string("1e-70", 256));
  EXPECT_LT(sk::abs(sk::pow(w, -3) * sk::pow(w, 3) - Complex(1, 0, 256)), Real::from_string("1e-70", 256));
  const Complex z(Real(3, 128), Real(4, 128));
  EXPECT_EQ(sk::abs(z).to_string(5), "5.0000");
  const Complex s = sk::sqrt(z);
  EXPECT_LT(sk::abs(s * s - z), Real::from_string("1e-30", 128));
}

TEST(Numeric, PolynomialRootsOfCyclotomic) {
  // u^7 - 1
  std::vector<Complex> p(8, Complex(0, 0, 256));
  p[0] = Complex(-1, 0, 256);
  p[7] = Complex(1, 0, 256);
  const sk::RootSet r = sk::polynomial_roots(p, 256);
  EXPECT_TRUE(r.converged);
  ASSERT_EQ(r.roots.size(), 7u);
  for (const Complex& u : r.roots) {
    EXPECT_LT(sk::abs(sk::pow(u, 7) - Complex(1, 0, 256)), Real::from_string("1e-70", 256));
  }
}

TEST(Numeric, SturmCounts) {
  // (x - 1)(x - 2)(x^2 + 1)
  const std::vector<Rational> p{2, -3, 3, -3, 1};
  EXPECT_EQ(sk::count_real_roots(p), 2);
  EXPECT_EQ(sk::count_real_roots(std::vector<Rational>{-1, -1, -6, 10, -41, 23}), 1);
}

TEST(Numeric, LinearSolveAndLeastSquares) {
  std::vector<std::vector<Real>> a{{Real(2, 128), Real(1, 128)}, {Real(1, 128), Real(3, 128)}};
  const auto x = sk::solve_linear(a, {Real(3, 128), Real(5, 128)});
  EXPECT_EQ(x[0].to_string(6), "0.800000");
  EXPECT_EQ(x[1].to_string(6), "1.40000");
  std::vector<std::vector<Real>> singular{{Real(1, 128), Real(2, 128)}, {Real(2, 128), Real(4, 128)}};
  EXPECT_THROW(sk::solve_linear(singular, {Real(1, 128), Real(1, 128)}), std::domain_error);
  // Exact line y = 1 + 2x recovered from four samples.
  std::vector<std::vector<Real>> design;
  std::vector<Real> y;
  for (long i = 0; i < 4; ++i) {
    design.push_back({Real(1, 128), Real(i, 128)});
    y.push_back(Real(1 + 2 * i, 128));
  }
  const auto c = sk::least_squares(design, y);
  EXPECT_LT(sk::abs(c[0] - Real(1, 128)), Real::from_string("1e-30", 128));
  EXPECT_LT(sk::abs(c[1] - Real(2, 128)), Real::from_string("1e-30", 128));
}
