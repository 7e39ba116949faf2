#include "slope_kernel/numeric.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace slope_kernel {
namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) {
    p.pop_back();
  }
}

RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) {
    d.push_back(p[i] * static_cast<long>(i));
  }
  trim(d);
  return d;
}

RatPoly remainder(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] -= f * b[i];
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

std::vector<RatPoly> sturm_chain(std::span<const Rational> coeffs) {
  RatPoly p(coeffs.begin(), coeffs.end());
  trim(p);
  if (p.empty()) {
    throw std::invalid_argument("Sturm chain of the zero polynomial");
  }
  std::vector<RatPoly> chain{p};
  RatPoly d = derivative(p);
  if (d.empty()) {
    return chain;
  }
  chain.push_back(d);
  while (true) {
    RatPoly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) {
      break;
    }
    for (Rational& c : r) {
      c = -c;
    }
    chain.push_back(std::move(r));
  }
  return chain;
}

int count_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) {
      continue;
    }
    if (last != 0 && s != last) {
      ++changes;
    }
    last = s;
  }
  return changes;
}

Real magnitude(const Real& x) { return abs(x); }
Real magnitude(const Complex& x) { return abs(x); }

template <typename T>
std::vector<T> gauss_solve(std::vector<std::vector<T>> a, std::vector<T> b) {
  const std::size_t n = b.size();
  if (a.size() != n) {
    throw std::invalid_argument("dimension mismatch in linear solve");
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    Real best = magnitude(a[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      Real m = magnitude(a[r][col]);
      if (m > best) {
        best = std::move(m);
        pivot = r;
      }
    }
    if (best.is_zero()) {
      throw std::domain_error("singular linear system");
    }
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const T f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) {
        a[r][c] -= f * a[col][c];
      }
      b[r] -= f * b[col];
    }
  }
  std::vector<T> x(b);
  for (std::size_t i = n; i-- > 0;) {
    T acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) {
      acc -= a[i][c] * x[c];
    }
    x[i] = acc / a[i][i];
  }
  return x;
}

}  // namespace

Complex evaluate(std::span<const Complex> coeffs, const Complex& x) {
  Complex acc(x.precision());
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * x + coeffs[i];
  }
  return acc;
}

Real evaluate(std::span<const Real> coeffs, const Real& x) {
  Real acc(x.precision());
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * x + coeffs[i];
  }
  return acc;
}

Real evaluate(std::span<const Rational> coeffs, const Real& x) {
  Real acc(x.precision());
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * x + coeffs[i];
  }
  return acc;
}

RootSet polynomial_roots(std::span<const Complex> coeffs, unsigned precision_bits,
                         std::span<const Complex> initial) {
  std::size_t n = coeffs.size();
  while (n > 0 && abs(coeffs[n - 1]).is_zero()) {
    --n;
  }
  if (n < 2) {
    throw std::invalid_argument("polynomial has no roots");
  }
  const std::size_t degree = n - 1;
  std::vector<Complex> monic;
  monic.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    monic.push_back(coeffs[i].with_precision(precision_bits) / coeffs[degree].with_precision(precision_bits));
  }

  RootSet out;
  if (!initial.empty()) {
    if (initial.size() != degree) {
      throw std::invalid_argument("one initial guess per root is required");
    }
    for (const Complex& z : initial) {
      out.roots.push_back(z.with_precision(precision_bits));
    }
  } else {
    Real radius = root(abs(monic[0]), degree);
    if (radius.is_zero()) {
      radius = Real(1, precision_bits);
    }
    // The angular offset keeps guesses off the real axis and off any
    // symmetry line of the coefficients.
    const Real two_pi = pi(precision_bits) * 2;
    for (std::size_t k = 0; k < degree; ++k) {
      Real theta = two_pi * static_cast<long>(k) / static_cast<long>(degree) + Real::from_double(0.4, precision_bits);
      out.roots.push_back(Complex::polar(radius, theta));
    }
  }

  const Real tolerance = exp2i(-static_cast<long>(precision_bits) + 8, precision_bits);
  const int max_iterations = 100 + 4 * static_cast<int>(precision_bits);
  auto value_and_derivative = [&](const Complex& x) {
    Complex p = monic[degree];
    Complex dp(precision_bits);
    for (std::size_t i = degree; i-- > 0;) {
      dp = dp * x + p;
      p = p * x + monic[i];
    }
    return std::pair{std::move(p), std::move(dp)};
  };

  for (out.iterations = 0; out.iterations < max_iterations; ++out.iterations) {
    Real worst(precision_bits);
    for (std::size_t i = 0; i < degree; ++i) {
      auto [p, dp] = value_and_derivative(out.roots[i]);
      if (abs(p).is_zero()) {
        continue;
      }
      if (abs(dp).is_zero()) {
        // Nudge off a critical point.
        out.roots[i] += Complex(tolerance, tolerance);
        worst = Real(1, precision_bits);
        continue;
      }
      const Complex ratio = p / dp;
      Complex repulsion(precision_bits);
      for (std::size_t j = 0; j < degree; ++j) {
        if (j != i) {
          repulsion += Complex(1, 0, precision_bits) / (out.roots[i] - out.roots[j]);
        }
      }
      const Complex step = ratio / (Complex(1, 0, precision_bits) - ratio * repulsion);
      out.roots[i] -= step;
      const Real scale = max(abs(out.roots[i]), Real(1, precision_bits));
      worst = max(worst, abs(step) / scale);
    }
    if (worst < tolerance) {
      out.converged = true;
      ++out.iterations;
      break;
    }
  }

  for (Complex& x : out.roots) {
    for (int k = 0; k < 3; ++k) {
      auto [p, dp] = value_and_derivative(x);
      if (abs(dp).is_zero() || abs(p).is_zero()) {
        break;
      }
      Complex candidate = x - p / dp;
      if (abs(value_and_derivative(candidate).first) < abs(p)) {
        x = std::move(candidate);
      } else {
        break;
      }
    }
  }
  return out;
}

int count_real_roots(std::span<const Rational> coeffs) {
  const std::vector<RatPoly> chain = sturm_chain(coeffs);
  std::vector<int> at_neg_inf;
  std::vector<int> at_pos_inf;
  for (const RatPoly& p : chain) {
    const int lead = sgn(p.back());
    at_pos_inf.push_back(lead);
    at_neg_inf.push_back((p.size() - 1) % 2 == 0 ? lead : -lead);
  }
  return count_changes(at_neg_inf) - count_changes(at_pos_inf);
}

int sturm_sign_changes(std::span<const Rational> coeffs, const Rational& x) {
  const std::vector<RatPoly> chain = sturm_chain(coeffs);
  std::vector<int> signs;
  for (const RatPoly& p : chain) {
    Rational acc;
    for (std::size_t i = p.size(); i-- > 0;) {
      acc = acc * x + p[i];
    }
    signs.push_back(sgn(acc));
  }
  return count_changes(signs);
}

std::vector<Complex> solve_linear(std::vector<std::vector<Complex>> a, std::vector<Complex> b) {
  return gauss_solve(std::move(a), std::move(b));
}

std::vector<Real> solve_linear(std::vector<std::vector<Real>> a, std::vector<Real> b) {
  return gauss_solve(std::move(a), std::move(b));
}

std::vector<Real> least_squares(const std::vector<std::vector<Real>>& design, const std::vector<Real>& y) {
  if (design.empty() || design.size() != y.size()) {
    throw std::invalid_argument("least squares needs one row per observation");
  }
  const std::size_t k = design.front().size();
  const unsigned bits = y.front().precision();
  std::vector<std::vector<Real>> normal(k, std::vector<Real>(k, Real(bits)));
  std::vector<Real> rhs(k, Real(bits));
  for (std::size_t i = 0; i < design.size(); ++i) {
    for (std::size_t r = 0; r < k; ++r) {
      rhs[r] += design[i][r] * y[i];
      for (std::size_t c = 0; c < k; ++c) {
        normal[r][c] += design[i][r] * design[i][c];
      }
    }
  }
  return solve_linear(std::move(normal), std::move(rhs));
}

}  // namespace slope_kernel
