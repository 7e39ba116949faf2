#include "oracles.hpp"

#include "slope_kernel/asymptotics.hpp"
#include "slope_kernel/enumerate.hpp"
#include "slope_kernel/kernel.hpp"

#include <gtest/gtest.h>

namespace sk = slope_kernel;
using sk::Complex;
using sk::Rational;
using sk::Real;
using sk::TruncSeries;

namespace {

constexpr unsigned kBits = 128;

Complex eval(const TruncSeries& s, const Complex& t) {
  Complex acc(0, 0, t.precision());
  for (std::size_t i = s.order() + 1; i-- > 0;) {
    acc = acc * t + Complex(Real(s[i], t.precision()), Real(0L, t.precision()));
  }
  return acc;
}

double dist(const Complex& a, const Complex& b) { return sk::abs(a - b).to_double(); }

}  // namespace

TEST(KernelForm, FromJumps) {
  const sk::KernelForm k = sk::KernelForm::from_jumps(sk::knuth_jumps());
  EXPECT_EQ(k.m, 2);
  EXPECT_EQ(k.degree(), 7);
  EXPECT_EQ(k.q.front(), Rational(1));
  EXPECT_EQ(k.q.back(), Rational(1));
  for (int i = 1; i < 7; ++i) {
    EXPECT_EQ(k.q[static_cast<std::size_t>(i)], Rational(0));
  }
}

TEST(SmallBranches, SatisfyKernelEquation) {
  // u^2 = z (1 + u^7) with z = t^2, as series in t.
  const auto b = sk::small_branch_series(sk::KernelForm::from_jumps(sk::knuth_jumps()), 40);
  for (const TruncSeries* u : {&b.u1, &b.u2}) {
    const TruncSeries lhs = u->pow(2);
    const TruncSeries rhs =
        TruncSeries::monomial(2, 40, 2) * (TruncSeries::constant(2, 40, Rational(1)) + u->pow(7));
    EXPECT_EQ(lhs, rhs);
  }
  EXPECT_EQ(b.u2, b.u1.negated_variable());
  EXPECT_EQ(b.u1[0], Rational(0));
  EXPECT_EQ(b.u1[1], Rational(1));
  EXPECT_EQ(b.u2[1], Rational(-1));
}

TEST(SmallBranches, Rejections) {
  EXPECT_THROW(sk::small_branch_series(sk::KernelForm::from_jumps(sk::JumpSet::parse("-2:2,+1")), 8),
               std::invalid_argument);
  EXPECT_THROW(sk::small_branch_series(sk::KernelForm::from_jumps(sk::JumpSet::unit({-3, 1})), 8),
               std::invalid_argument);
}

TEST(KernelMethod, KnuthSeriesMatchExhaustiveCounts) {
  const sk::KnuthSeries s = sk::series_F0_G1(30);
  ASSERT_GE(s.f0.order(), 30u);
  for (int n = 0; n <= 19; ++n) {
    const auto i = static_cast<std::size_t>(n);
    EXPECT_EQ(s.f0[i], Rational(oracle::count_walks({-2, 5}, 3, 0, 0, n))) << n;
    EXPECT_EQ(s.g1[i], Rational(oracle::count_walks({-2, 5}, 4, 0, 1, n))) << n;
  }
  EXPECT_EQ(s.g1[5], Rational(3));
  EXPECT_EQ(s.f0[5], Rational(2));
}

TEST(KernelMethod, OtherStartsAndKernels) {
  for (const auto& jumps : {sk::knuth_jumps(), sk::JumpSet::unit({-2, 1}), sk::JumpSet::unit({-2, 3})}) {
    const sk::KernelForm k = sk::KernelForm::from_jumps(jumps);
    std::vector<int> deltas;
    for (const auto& j : jumps.jumps()) {
      deltas.push_back(j.delta);
    }
    for (int start = 0; start <= 4; ++start) {
      const sk::BoundarySeries s = sk::kernel_method_series(k, start, 16);
      for (int n = 0; n <= 16; ++n) {
        const auto i = static_cast<std::size_t>(n);
        EXPECT_EQ(s.f0[i], Rational(oracle::count_walks(deltas, start, 0, 0, n))) << start << " " << n;
        EXPECT_EQ(s.f1[i], Rational(oracle::count_walks(deltas, start, 0, 1, n))) << start << " " << n;
      }
    }
  }
}

TEST(KernelMethod, PowerSums) {
  // Coefficient values are checked in the identities suite; here only the
  // support (exponents = 6 mod 7).
  const TruncSeries s = sk::sym_power_series(50);
  EXPECT_EQ(s.ramification(), 1u);
  for (std::size_t i = 0; i <= 50; ++i) {
    if (i % 7 != 6) {
      EXPECT_EQ(s[i], Rational(0)) << i;
    }
  }
  EXPECT_NE(s[6], Rational(0));
  EXPECT_EQ(s, sk::power_sum_series(sk::KernelForm::from_jumps(sk::knuth_jumps()), 5, 50));
}

TEST(Numeric, RootsSatisfyPolynomial) {
  const sk::KernelForm k = sk::KernelForm::from_jumps(sk::knuth_jumps());
  const Complex z(Real::from_double(0.1, kBits), Real::from_double(0.05, kBits));
  const sk::BranchValue v = sk::numeric_branches(k, z, kBits);
  ASSERT_EQ(v.roots.size(), 7u);
  EXPECT_EQ(v.small_indices.size(), 2u);
  EXPECT_EQ(v.large_indices.size(), 5u);
  EXPECT_LT(v.max_residual().to_double(), 1e-30);
  EXPECT_THROW(sk::numeric_branches(k, Complex(0, 0, kBits), kBits), std::invalid_argument);
}

TEST(Numeric, AgreesWithPuiseuxSeries) {
  const sk::KernelForm k = sk::KernelForm::from_jumps(sk::knuth_jumps());
  const auto b = sk::small_branch_series(k, 120);
  for (double re : {0.01, 0.05}) {
    for (double im : {0.0, 0.02}) {
      const Complex z(Real::from_double(re, kBits), Real::from_double(im, kBits));
      const Complex t = sk::sqrt(z);
      const auto u = sk::small_branch_values(k, z, kBits);
      ASSERT_EQ(u.size(), 2u);
      EXPECT_LT(dist(u[0], eval(b.u1, t)), 1e-30) << re << " " << im;
      EXPECT_LT(dist(u[1], eval(b.u2, t)), 1e-30) << re << " " << im;
    }
  }
}

TEST(Rotation, SamplePoints) {
  for (const Complex& z : sk::rotation_sample_points(6, kBits)) {
    const sk::RotationCheck r = sk::verify_rotation_law(z, kBits);
    EXPECT_TRUE(r.passed) << z.to_string(12);
    EXPECT_LT(r.rotation_residual_u1, r.tolerance);
    EXPECT_LT(r.rotation_residual_u2, r.tolerance);
  }
}

TEST(Rotation, NearSingularRays) {
  const Real rho = sk::structural_constants(sk::knuth_jumps(), kBits).rho;
  // Half way between two singular rays the split is clean.
  const Complex mid = Complex::polar(rho, sk::pi(kBits) / 7);
  EXPECT_TRUE(sk::verify_rotation_law(mid, kBits).passed);
  // On the singular ray itself the branches collide.
  const Complex zeta1 = Complex::polar(rho, sk::pi(kBits) * 2 / 7);
  EXPECT_THROW(sk::verify_rotation_law(zeta1, kBits), sk::BranchAmbiguityError);
}

TEST(Rotation, DomainChecks) {
  const Complex outside(Real::from_double(0.9, kBits), Real::from_double(0.1, kBits));
  EXPECT_THROW(sk::verify_rotation_law(outside, kBits), std::invalid_argument);
  const Complex negative_arg(Real::from_double(0.2, kBits), Real::from_double(-0.1, kBits));
  EXPECT_THROW(sk::verify_rotation_law(negative_arg, kBits), std::invalid_argument);
}
