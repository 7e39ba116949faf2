#pragma once

#include "slope_kernel/jump_set.hpp"
#include "slope_kernel/real.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace slope_kernel {

// tau is the unique positive root of P'(u) and rho = 1 / P(tau).
struct StructuralConstants {
  Real tau;
  Real rho;
  Real p_at_tau;
  Real derivative_residual;  // |P'(tau)|
  Real rho_residual;         // |rho P(tau) - 1|
  unsigned precision_bits = kDefaultPrecisionBits;
};

// Newton on P' inside a sign-change bracket. Throws std::invalid_argument
// below kMinPrecisionBits.
StructuralConstants structural_constants(const JumpSet& jumps, unsigned precision_bits);

struct Tau2Result {
  Real value;                  // negative real root of rho (1 + u^7) = u^2
  Real polynomial_residual;    // degree-35 minimal polynomial at value
  Real branch_gap_1e8;         // |u2(rho (1 - 1e-8)) - value|
  Real branch_gap_1e9;         // |u2(rho (1 - 1e-9)) - value|
};

// Throws std::runtime_error when the continued branch u2 does not approach
// the root (gap above 1e-6 at 1e-8 or not shrinking roughly tenfold).
Tau2Result tau2(unsigned precision_bits);

// Local data at rho from a fit of F_0 and G_1 in x = sqrt(1 - z / rho).
struct PuiseuxData {
  std::vector<Real> g;  // G_1 = sum g_j x^j
  std::vector<Real> f;  // F_0 = sum f_j x^j
  Real fit_residual;
};

PuiseuxData puiseux_at_rho(unsigned precision_bits);

struct AsymptoticConstants {
  unsigned precision_bits = kDefaultPrecisionBits;
  Real tau;
  Real rho;
  Real p_at_tau;
  Real tau2;
  Real mu;  // tau2 / tau
  Real alpha1;
  Real beta1;
  // Second-order constants from the local expansion of G_1 and F_0 at rho.
  Real alpha2;
  Real beta2;
  // The displayed closed form for alpha2 read as a plain sum, and
  // beta2 = -(9/10) sqrt 5 - alpha2. Kept for the report; they do not
  // reproduce kappa2 (see findings).
  Real alpha2_display;
  Real beta2_display;
  Real kappa1;             // alpha1 / beta1
  Real kappa1_mu_form;     // -5 / (mu^4 + 2 mu^3 + 3 mu^2 + 4 mu) - 1
  Real kappa2;             // (3/9800)(13 - 236 k - 194 k^2 - 388 k^3 + 437 k^4)
  Real kappa2_ratio_form;  // -(3/14)(alpha2 beta1 - alpha1 beta2) / beta1^2
  Real kappa2_display_ratio;
  std::map<std::string, Real> residuals;
  std::vector<std::string> findings;
};

// Throws std::invalid_argument below 128 bits and std::runtime_error when
// the independent routes to kappa1 or kappa2 disagree.
AsymptoticConstants knuth_constants(unsigned precision_bits);

struct MinimalPolynomialReport {
  Real kappa1_residual;  // 23x^5 - 41x^4 + 10x^3 - 6x^2 - x - 1
  Real kappa2_residual;  // at (7/3) kappa2
  Real tau2_residual;
  int kappa1_real_roots = 0;
  int kappa2_real_roots = 0;
  int tau2_real_roots = 0;
  Real tolerance;  // 2^(-precision/2)
  bool passed = false;
};

MinimalPolynomialReport verify_minimal_polynomials(const AsymptoticConstants& constants);
// Same check for arbitrary values (used for sensitivity tests).
MinimalPolynomialReport verify_minimal_polynomials(const Real& kappa1, const Real& kappa2, const Real& tau2,
                                                   unsigned precision_bits);

struct LocalExpansion {
  int k = 7;
  Complex zeta;             // rho w^k
  int singular_branch = 0;  // 1 or 2, decided from the fitted data
  // Both branches as polynomials in x = sqrt(1 - z / zeta).
  std::vector<Complex> singular_coeffs;
  std::vector<Complex> regular_coeffs;
  Complex c_fit;        // x coefficient of the singular branch
  Complex c_expected;   // -(tau / sqrt 5) w^(-3k)
  Complex c_prime_fit;  // x^3 coefficient of the singular branch
  Complex d_fit;        // x^2 coefficient of the regular branch
  Complex d_expected;   // tau2 (tau2^7 + 1) / (5 tau2^7 - 2) w^(-3k)
  Real c_error;
  Real d_error;
  Real fit_residual;  // largest misfit at check nodes between the samples
};

struct LocalFitOptions {
  int degree = 28;
  double h = 0.2;  // samples with x in (0, h)
};

// Samples both labelled small branches at z = zeta_k (1 - x^2) and fits
// polynomials in x. Throws std::runtime_error if the misfit exceeds 1e-12.
LocalExpansion fit_local_expansion(int k, unsigned precision_bits, const LocalFitOptions& options = {});

struct RatioConvergence {
  int n_max = 0;
  Real kappa1_est;
  Real kappa2_est;
  // n^2 |A_n/B_n - kappa1 + kappa2/n| for n in [n_max/4, n_max].
  std::vector<std::pair<int, Real>> scaled_error;
  Real decay_ratio;  // e(n_max/2) / e(n_max)
  bool bounded = false;
};

// Least-squares fit of A_n/B_n against a + b/n + c/n^2. The scaled error
// counts as bounded when its maximum over the upper half of the range does
// not exceed twice its maximum over the lower half.
RatioConvergence ratio_convergence(int n_max, unsigned precision_bits = kDefaultPrecisionBits);

struct LeadingConstant {
  int n_max = 0;
  Real target;  // sqrt(5 / (343 pi))
  Real estimate;
  Real relative_error;
  std::vector<std::pair<int, Real>> scaled;  // C_n (12500/823543)^n n^(3/2)
};

// Extrapolates C_n (12500/823543)^n n^(3/2), C_n = A_n + B_n from walk
// counts, with a + b/n + c/n^2 on the tail. Requires n_max >= 50.
LeadingConstant leading_constant_check(int n_max, unsigned precision_bits = kDefaultPrecisionBits);

struct DuchonAreaFit {
  int n_max = 0;
  Real c0;  // limit of mean area / n^(3/2) for excursions of length n
  Real c1;
  Real k_est;  // sqrt(5) c0, the constant for North/East paths of length n/5
  Real target;
  Real relative_error;
  std::vector<std::pair<int, Real>> ratios;  // n, mean area / n^(3/2)
};

// Requires n_max >= 50 and a multiple of 5.
DuchonAreaFit duchon_area_constant(int n_max, unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace slope_kernel
