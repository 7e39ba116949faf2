#include "slope_kernel/asymptotics.hpp"
#include "slope_kernel/enumerate.hpp"

#include <gtest/gtest.h>

namespace sk = slope_kernel;
using sk::Complex;
using sk::Rational;
using sk::Real;

namespace {

double gap(const Real& a, const Real& b) { return sk::abs(a - b).to_double(); }

Real dec(const char* text, unsigned bits) { return Real::from_string(text, bits); }

const sk::AsymptoticConstants& constants256() {
  static const sk::AsymptoticConstants c = sk::knuth_constants(256);
  return c;
}

}  // namespace

TEST(Structural, KnuthTauAndRho) {
  const auto s = sk::structural_constants(sk::knuth_jumps(), 256);
  EXPECT_LT(gap(sk::pow(s.tau, 7), Real(Rational(2, 5), 256)), 1e-70);
  EXPECT_LT(gap(sk::pow(s.rho, 7), Real(Rational(12500, 823543), 256)), 1e-70);
  EXPECT_LT(s.derivative_residual.to_double(), 1e-70);
  EXPECT_LT(s.rho_residual.to_double(), 1e-70);
}

TEST(Structural, DuchonTau) {
  const auto s = sk::structural_constants(sk::duchon_jumps(), 128);
  EXPECT_LT(gap(sk::pow(s.tau, 5), Real(Rational(3, 2), 128)), 1e-34);
  EXPECT_THROW(sk::structural_constants(sk::duchon_jumps(), 32), std::invalid_argument);
}

TEST(Tau2, NegativeRootReachedByContinuation) {
  const auto t = sk::tau2(256);
  EXPECT_LT(gap(t.value, dec("-0.70772327075303431626609", 256)), 1e-22);
  EXPECT_LT(t.polynomial_residual.to_double(), 1e-60);
  EXPECT_LT(t.branch_gap_1e8.to_double(), 1e-6);
  EXPECT_LT(t.branch_gap_1e9, t.branch_gap_1e8);
}

TEST(Constants, KappaValues) {
  const auto& c = constants256();
  EXPECT_LT(gap(c.kappa1, dec("1.63025766299035014042480184932", 256)), 1e-28);
  EXPECT_LT(gap(c.kappa2, dec("0.158668226972022775514780419816", 256)), 1e-28);
  EXPECT_LT(gap(c.kappa1, c.kappa1_mu_form), 1e-60);
  EXPECT_LT(gap(c.kappa2, c.kappa2_ratio_form), 1e-30);
  EXPECT_LT(gap(c.alpha1 / c.beta1, c.kappa1), 1e-60);
  // The decimal reading of the displayed alpha2 does not give kappa2.
  EXPECT_GT(gap(c.kappa2_display_ratio, c.kappa2), 1.0);
  EXPECT_THROW(sk::knuth_constants(96), std::invalid_argument);
}

TEST(Constants, MinimalPolynomials) {
  const auto& c = constants256();
  const auto r = sk::verify_minimal_polynomials(c);
  EXPECT_TRUE(r.passed);
  EXPECT_LT(r.kappa1_residual, r.tolerance);
  EXPECT_LT(r.kappa2_residual, r.tolerance);
  EXPECT_LT(r.tau2_residual, r.tolerance);
  EXPECT_EQ(r.kappa1_real_roots, 1);
  EXPECT_EQ(r.kappa2_real_roots, 1);
  // A perturbation far above the tolerance is detected.
  const Real bumped = c.kappa1 + Real::from_string("1e-30", 256);
  EXPECT_FALSE(sk::verify_minimal_polynomials(bumped, c.kappa2, c.tau2, 256).passed);
}

TEST(LocalExpansion, AllSingularRays) {
  for (int k = 1; k <= 7; ++k) {
    const auto e = sk::fit_local_expansion(k, 128);
    const int expected_branch = (k == 2 || k == 5 || k == 7) ? 1 : 2;
    EXPECT_EQ(e.singular_branch, expected_branch) << k;
    EXPECT_LT(e.c_error.to_double(), 1e-20) << k;
    EXPECT_LT(e.d_error.to_double(), 1e-20) << k;
    EXPECT_LT(e.fit_residual.to_double(), 1e-12) << k;
  }
}

TEST(LocalExpansion, RealSingularityCoefficients) {
  const auto e = sk::fit_local_expansion(7, 128);
  const auto s = sk::structural_constants(sk::knuth_jumps(), 128);
  const Real c7 = -s.tau / sk::sqrt(Real(5L, 128));
  EXPECT_LT(sk::abs(e.c_fit - Complex(c7)).to_double(), 1e-25);
  EXPECT_LT(gap(c7, dec("-0.39234346", 128)), 1e-7);
  // x^3 coefficient over x coefficient of the singular branch.
  const Complex ratio = e.c_prime_fit / e.c_fit;
  EXPECT_LT(sk::abs(ratio - Complex(Real(Rational(2, 5), 128))).to_double(), 1e-20);
}

TEST(Extrapolation, RatioConvergence) {
  const auto r = sk::ratio_convergence(100);
  EXPECT_TRUE(r.bounded);
  EXPECT_GT(r.decay_ratio.to_double(), 3.0);
  EXPECT_LT(gap(r.kappa1_est, constants256().kappa1), 1e-5);
}

TEST(Extrapolation, LeadingConstant) {
  const auto r = sk::leading_constant_check(200);
  EXPECT_LT(r.relative_error.to_double(), 1e-6);
  EXPECT_LT(gap(r.target, dec("0.0681181", 256)), 1e-6);
  EXPECT_THROW(sk::leading_constant_check(40), std::invalid_argument);
}

TEST(Extrapolation, DuchonArea) {
  const auto r = sk::duchon_area_constant(500);
  EXPECT_LT(r.relative_error.to_double(), 0.01);
  EXPECT_THROW(sk::duchon_area_constant(502), std::invalid_argument);
  EXPECT_THROW(sk::duchon_area_constant(45), std::invalid_argument);
}
