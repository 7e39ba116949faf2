#pragma once

#include "slope_kernel/arith.hpp"
#include "slope_kernel/jump_set.hpp"
#include "slope_kernel/real.hpp"
#include "slope_kernel/series.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace slope_kernel {

// The kernel equation 1 - z P(u) = 0 rewritten as u^m = z Q(u), where
// m = -min_delta and Q(0) != 0. For P(u) = u^-2 + u^5 this is
// u^2 = z (1 + u^7).
struct KernelForm {
  JumpSet jumps;
  int m = 0;
  std::vector<Rational> q;  // Q in ascending powers

  static KernelForm from_jumps(const JumpSet& jumps);

  // Number of kernel roots: m small plus max_delta large.
  int degree() const { return static_cast<int>(q.size()) - 1; }
};

// --- Symbolic layer (exact rationals, m = 2 only) ----------------------------

struct SmallBranchSeries {
  TruncSeries u1;  // w(0) = +sqrt(Q(0)), positive for small z > 0
  TruncSeries u2;  // w(0) = -sqrt(Q(0))
};

// Puiseux expansions of the two small roots in t = z^(1/2), exact to t^order.
// Computed by Newton iteration on u = t w, w^2 = Q(t w). Throws
// std::invalid_argument unless m = 2 and Q(0) is a rational square.
SmallBranchSeries small_branch_series(const KernelForm& kernel, std::size_t order);

struct BoundarySeries {
  TruncSeries f0;  // walks ending at altitude 0
  TruncSeries f1;  // walks ending at altitude 1
};

// Kernel-method closed forms for meanders started at `start_altitude`:
// substituting both small roots into the functional equation and solving
// the 2x2 system (Cramer's rule). Series in z, exact to z^z_order.
BoundarySeries kernel_method_series(const KernelForm& kernel, int start_altitude, std::size_t z_order);

struct KnuthSeries {
  TruncSeries f0;  // start 3, end 0
  TruncSeries g1;  // start 4, end 1
};

// F_0 = -u1 u2 (u1^4 - u2^4) / (z (u1 - u2)) and
// G_1 = (u1^6 - u2^6) / (z (u1 - u2)) for P(u) = u^-2 + u^5.
KnuthSeries series_F0_G1(std::size_t z_order);

// u1^power + u2^power as a series in z.
TruncSeries power_sum_series(const KernelForm& kernel, unsigned power, std::size_t z_order);

// u1^5 + u2^5 for P(u) = u^-2 + u^5.
TruncSeries sym_power_series(std::size_t z_order);

// --- Numeric layer (MPFR) -----------------------------------------------------

// Raised when the small/large split at a point is not resolvable at the
// working precision, i.e. the point is too close to a singularity.
class BranchAmbiguityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Coefficients of z Q(u) - u^m.
std::vector<Complex> kernel_polynomial(const KernelForm& kernel, const Complex& z);

struct BranchValue {
  Complex z;
  std::vector<Complex> roots;  // sorted by increasing modulus
  std::vector<std::size_t> small_indices;
  std::vector<std::size_t> large_indices;
  std::vector<Real> residuals;  // |z Q(u) - u^m| per root
  Real relative_gap;            // between the m-th and (m+1)-th modulus
  unsigned precision_bits = kDefaultPrecisionBits;

  Real max_residual() const;
};

// All kernel roots at z, unclassified. Aberth iteration started on a circle
// between the small and the large cluster.
std::vector<Complex> kernel_roots(const KernelForm& kernel, const Complex& z, unsigned precision_bits);

// Roots at z split into the m small and the remaining large ones by
// modulus. Throws BranchAmbiguityError when the relative modulus gap
// between ranks m and m+1 is below 2^(-precision/4); std::invalid_argument
// for z = 0.
BranchValue numeric_branches(const KernelForm& kernel, const Complex& z, unsigned precision_bits);

// Values of the labelled small branches along the ray {r * direction}:
// label j is the branch ~ e^(2 pi i j / m) (Q(0) z)^(1/m) near 0 (principal
// root), so label 0 is u1. Labels are carried by continuation with adaptive
// steps; `radii` must be ascending. result[i][j] = u_{j+1}(radii[i] *
// direction).
std::vector<std::vector<Complex>> track_small_branches(const KernelForm& kernel, const Complex& direction,
                                                       std::span<const Real> radii,
                                                       unsigned precision_bits);

// Labelled small branches at z (continuation from 0 along the segment
// [0, z]), with a final small/large classification check at z.
std::vector<Complex> small_branch_values(const KernelForm& kernel, const Complex& z, unsigned precision_bits);

struct RotationCheck {
  Complex z;
  Real rotation_residual_u1;      // |u1(w z) - w^-3 u2(z)|
  Real rotation_residual_u2;      // |u2(w z) - w^-3 u1(z)|
  Real conjugation_residual_u1;   // |u1(conj z) - conj u1(z)|
  Real conjugation_residual_u2;
  Real tolerance;                 // 10 * 2^(-precision/2)
  bool passed = false;
};

// Rotation law of the slope-2/5 small branches with w = e^(2 pi i / 7).
// z must satisfy |z| <= rho and 0 < arg z < pi - 2 pi / 7
// (std::invalid_argument otherwise). Propagates BranchAmbiguityError near
// a singular ray.
RotationCheck verify_rotation_law(const Complex& z, unsigned precision_bits);

// Deterministic points of the rotation-law domain: moduli from 0.2 rho to
// 0.95 rho, arguments spread over (0, pi - 2 pi / 7).
std::vector<Complex> rotation_sample_points(int count, unsigned precision_bits);

}  // namespace slope_kernel
