#pragma once

#include "slope_kernel/arith.hpp"
#include "slope_kernel/real.hpp"

#include <span>
#include <vector>

namespace slope_kernel {

// Polynomials are coefficient vectors in ascending powers.

Complex evaluate(std::span<const Complex> coeffs, const Complex& x);
Real evaluate(std::span<const Real> coeffs, const Real& x);
Real evaluate(std::span<const Rational> coeffs, const Real& x);

struct RootSet {
  std::vector<Complex> roots;
  int iterations = 0;
  bool converged = false;
};

// All complex roots of a polynomial by Aberth-Ehrlich simultaneous
// iteration, followed by a Newton polish of every root. `initial` seeds
// the iteration (one guess per root); otherwise guesses are spread on a
// circle of radius (|a0| / |an|)^(1/n).
RootSet polynomial_roots(std::span<const Complex> coeffs, unsigned precision_bits,
                         std::span<const Complex> initial = {});

// Number of distinct real roots of a nonzero rational polynomial (Sturm).
int count_real_roots(std::span<const Rational> coeffs);

// Sign changes of the Sturm chain evaluated at a rational point.
int sturm_sign_changes(std::span<const Rational> coeffs, const Rational& x);

// Solves the square system A x = b by Gaussian elimination with partial
// pivoting. Throws std::domain_error on a singular matrix.
std::vector<Complex> solve_linear(std::vector<std::vector<Complex>> a, std::vector<Complex> b);
std::vector<Real> solve_linear(std::vector<std::vector<Real>> a, std::vector<Real> b);

// Least-squares fit y ~ sum_j c_j * basis_j(x) via normal equations.
// `design[i][j]` is basis_j evaluated at sample i.
std::vector<Real> least_squares(const std::vector<std::vector<Real>>& design,
                                const std::vector<Real>& y);

}  // namespace slope_kernel
