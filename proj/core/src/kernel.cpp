#include "slope_kernel/kernel.hpp"

#include "slope_kernel/asymptotics.hpp"
#include "slope_kernel/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace slope_kernel {
namespace {

constexpr unsigned kT = 2;  // ramification of the small branches: z = t^2

void require_quadratic(const KernelForm& kernel) {
  if (kernel.m != 2) {
    throw std::invalid_argument("symbolic small branches need m = 2 (got m = " + std::to_string(kernel.m) +
                                "); use numeric_branches");
  }
}

Rational rational_sqrt(const Rational& x) {
  const BigInt num = x.get_num();
  const BigInt den = x.get_den();
  if (sgn(x) <= 0 || mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    throw std::invalid_argument("Q(0) = " + x.get_str() + " is not a rational square");
  }
  BigInt rn;
  BigInt rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return make_rational(rn, rd);
}

TruncSeries padded(const TruncSeries& s, std::size_t order) {
  std::vector<Rational> c(s.coeffs().begin(), s.coeffs().begin() + static_cast<long>(std::min(order, s.order()) + 1));
  return TruncSeries(s.ramification(), order, std::move(c));
}

// Q(x) and Q'(x) for a series x, by Horner.
std::pair<TruncSeries, TruncSeries> eval_q(const std::vector<Rational>& q, const TruncSeries& x) {
  const std::size_t order = x.order();
  TruncSeries value = TruncSeries::constant(x.ramification(), order, q.back());
  TruncSeries slope(x.ramification(), order);
  for (std::size_t i = q.size() - 1; i-- > 0;) {
    slope = slope * x + value;
    value = value * x + TruncSeries::constant(x.ramification(), order, q[i]);
  }
  return {std::move(value), std::move(slope)};
}

// Solves w^2 = Q(t w) with w(0) = w0, exact to t^order.
TruncSeries newton_branch(const std::vector<Rational>& q, const Rational& w0, std::size_t order) {
  TruncSeries w = TruncSeries::constant(kT, 0, w0);
  std::size_t precision = 0;
  while (precision < order) {
    precision = std::min(2 * precision + 1, order);
    w = padded(w, precision);
    const TruncSeries tw = w.shifted_up(1).truncated(precision);
    auto [qv, qd] = eval_q(q, tw);
    const TruncSeries f = w * w - qv;
    const TruncSeries fp = w * Rational(2) - qd.shifted_up(1).truncated(precision);
    w -= series_div_unit(f, fp);
  }
  return w;
}

BranchValue classify(const KernelForm& kernel, const Complex& z, std::vector<Complex> roots, unsigned bits) {
  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) { return abs(a) < abs(b); });
  BranchValue out{z, std::move(roots), {}, {}, {}, Real(bits), bits};
  const auto m = static_cast<std::size_t>(kernel.m);
  const std::vector<Complex> poly = kernel_polynomial(kernel, z);
  for (std::size_t i = 0; i < out.roots.size(); ++i) {
    (i < m ? out.small_indices : out.large_indices).push_back(i);
    out.residuals.push_back(abs(evaluate(poly, out.roots[i])));
  }
  const Real inner = abs(out.roots[m - 1]);
  const Real outer = abs(out.roots[m]);
  out.relative_gap = (outer - inner) / outer;
  if (out.relative_gap < exp2i(-static_cast<long>(bits / 4), bits)) {
    throw BranchAmbiguityError("small/large roots not separable at z = " + z.to_string(20) +
                               " (relative modulus gap " + out.relative_gap.to_string(6) + ")");
  }
  return out;
}

// Index of the nearest and the distance ratio nearest / second nearest.
std::pair<std::size_t, Real> nearest(const std::vector<Complex>& pool, const Complex& x) {
  std::size_t best = 0;
  Real d1 = abs(pool[0] - x);
  Real d2(x.precision());
  bool have_second = false;
  for (std::size_t i = 1; i < pool.size(); ++i) {
    Real d = abs(pool[i] - x);
    if (d < d1) {
      d2 = d1;
      have_second = true;
      d1 = d;
      best = i;
    } else if (!have_second || d < d2) {
      d2 = d;
      have_second = true;
    }
  }
  if (!have_second || d2.is_zero()) {
    return {best, Real(0, x.precision())};
  }
  return {best, d1 / d2};
}

bool newton_steps_small(const std::vector<Complex>& poly, const std::vector<Complex>& roots) {
  std::vector<Complex> deriv;
  for (std::size_t k = 1; k < poly.size(); ++k) {
    deriv.push_back(poly[k] * static_cast<long>(k));
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Real separation = abs(roots[i]);
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j != i) {
        separation = min(separation, abs(roots[i] - roots[j]));
      }
    }
    const Complex d = evaluate(deriv, roots[i]);
    if (abs(d).is_zero() || abs(evaluate(poly, roots[i]) / d) * 8 > separation) {
      return false;
    }
  }
  return true;
}

}  // namespace

KernelForm KernelForm::from_jumps(const JumpSet& jumps) {
  KernelForm k{jumps, -jumps.min_delta(), {}};
  k.q.assign(static_cast<std::size_t>(k.m + jumps.max_delta() + 1), Rational(0));
  for (const Jump& j : jumps.jumps()) {
    k.q[static_cast<std::size_t>(j.delta + k.m)] = j.weight;
  }
  return k;
}

SmallBranchSeries small_branch_series(const KernelForm& kernel, std::size_t order) {
  require_quadratic(kernel);
  if (order < 1) {
    throw std::invalid_argument("branch series need order >= 1");
  }
  const Rational w0 = rational_sqrt(kernel.q[0]);
  TruncSeries w_plus = newton_branch(kernel.q, w0, order - 1);
  TruncSeries w_minus = newton_branch(kernel.q, -w0, order - 1);
  return {w_plus.shifted_up(1), w_minus.shifted_up(1)};
}

BoundarySeries kernel_method_series(const KernelForm& kernel, int start_altitude, std::size_t z_order) {
  require_quadratic(kernel);
  if (start_altitude < 0) {
    throw std::invalid_argument("start altitude must be nonnegative");
  }
  // z (u1 - u2) has t-valuation 3.
  const std::size_t t_order = 2 * z_order + 4;
  const auto [u1, u2] = small_branch_series(kernel, t_order);
  const auto s = static_cast<unsigned>(start_altitude);
  const TruncSeries u1s = u1.pow(s);
  const TruncSeries u2s = u2.pow(s);
  const TruncSeries denom = (u1 - u2).shifted_up(2);

  // z (Q0 F0 + u (Q0 F1 + Q1 F0)) = u^2 f0(u) at u = u1, u2.
  const TruncSeries x = series_div_unit(-(u1 * u2) * (u1 * u1s - u2 * u2s), denom);
  const TruncSeries y = series_div_unit(u1 * u1 * u1s - u2 * u2 * u2s, denom);
  const Rational& q0 = kernel.q[0];
  const Rational& q1 = kernel.q[1];
  const Rational inv_q0 = 1 / q0;
  TruncSeries f0 = x * inv_q0;
  TruncSeries f1 = (y - f0 * q1) * inv_q0;
  return {f0.deramified(kT).truncated(z_order), f1.deramified(kT).truncated(z_order)};
}

KnuthSeries series_F0_G1(std::size_t z_order) {
  const KernelForm kernel = KernelForm::from_jumps(knuth_jumps());
  const std::size_t t_order = 2 * z_order + 4;
  const auto [u1, u2] = small_branch_series(kernel, t_order);
  const TruncSeries denom = (u1 - u2).shifted_up(2);
  const TruncSeries f0 = series_div_unit(-(u1 * u2) * (u1.pow(4) - u2.pow(4)), denom);
  const TruncSeries g1 = series_div_unit(u1.pow(6) - u2.pow(6), denom);
  return {f0.deramified(kT).truncated(z_order), g1.deramified(kT).truncated(z_order)};
}

TruncSeries power_sum_series(const KernelForm& kernel, unsigned power, std::size_t z_order) {
  const auto [u1, u2] = small_branch_series(kernel, 2 * z_order + 1);
  return (u1.pow(power) + u2.pow(power)).deramified(kT).truncated(z_order);
}

TruncSeries sym_power_series(std::size_t z_order) {
  return power_sum_series(KernelForm::from_jumps(knuth_jumps()), 5, z_order);
}

std::vector<Complex> kernel_polynomial(const KernelForm& kernel, const Complex& z) {
  std::vector<Complex> coeffs;
  coeffs.reserve(kernel.q.size());
  for (std::size_t k = 0; k < kernel.q.size(); ++k) {
    coeffs.emplace_back(z.re() * kernel.q[k], z.im() * kernel.q[k]);
  }
  coeffs[static_cast<std::size_t>(kernel.m)] -= Complex(1, 0, z.precision());
  return coeffs;
}

Real BranchValue::max_residual() const {
  Real worst(precision_bits);
  for (const Real& r : residuals) {
    worst = max(worst, r);
  }
  return worst;
}

std::vector<Complex> kernel_roots(const KernelForm& kernel, const Complex& z, unsigned precision_bits) {
  const Complex zz = z.with_precision(precision_bits);
  const Real modulus = abs(zz);
  if (modulus.is_zero()) {
    throw std::invalid_argument("kernel roots are degenerate at z = 0");
  }
  // Small roots ~ (|z| Q(0))^(1/m), large ones ~ (|z| q_top)^(-1/M).
  const int big = kernel.degree() - kernel.m;
  const Real small_scale = root(modulus * kernel.q.front(), static_cast<unsigned long>(kernel.m));
  const Real large_scale = 1 / root(modulus * kernel.q.back(), static_cast<unsigned long>(big));
  const Real radius = sqrt(small_scale * large_scale);
  std::vector<Complex> start;
  const Real two_pi = pi(precision_bits) * 2;
  const auto n = static_cast<long>(kernel.degree());
  for (long k = 0; k < n; ++k) {
    start.push_back(Complex::polar(radius, two_pi * k / n + Real::from_double(0.4, precision_bits)));
  }
  return polynomial_roots(kernel_polynomial(kernel, zz), precision_bits, start).roots;
}

BranchValue numeric_branches(const KernelForm& kernel, const Complex& z, unsigned precision_bits) {
  return classify(kernel, z.with_precision(precision_bits), kernel_roots(kernel, z, precision_bits),
                  precision_bits);
}

std::vector<std::vector<Complex>> track_small_branches(const KernelForm& kernel, const Complex& direction,
                                                       std::span<const Real> radii,
                                                       unsigned precision_bits) {
  if (radii.empty()) {
    return {};
  }
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i].sign() <= 0 || (i > 0 && radii[i] < radii[i - 1])) {
      throw std::invalid_argument("radii must be positive and ascending");
    }
  }
  const unsigned bits = precision_bits;
  const Complex unit = direction.with_precision(bits) / abs(direction.with_precision(bits));
  const auto m = static_cast<std::size_t>(kernel.m);

  // Start close to 0, where the small roots follow their Puiseux leading
  // term and are well separated from each other and from the large ones.
  Real r = min(radii.front().with_precision(bits), exp2i(-10, bits));
  std::vector<Complex> roots = kernel_roots(kernel, unit * r, bits);
  {
    const Complex lead = root(unit * r * Real(kernel.q.front(), bits), static_cast<unsigned long>(m));
    std::vector<Complex> ordered;
    std::vector<bool> used(roots.size(), false);
    for (std::size_t j = 0; j < m; ++j) {
      const Complex guess = lead * Complex::root_of_unity(static_cast<long>(j), static_cast<long>(m), bits);
      const std::size_t idx = nearest(roots, guess).first;
      if (used[idx]) {
        throw BranchAmbiguityError("could not label the small branches near 0");
      }
      used[idx] = true;
      ordered.push_back(roots[idx]);
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (!used[i]) {
        ordered.push_back(roots[i]);
      }
    }
    roots = std::move(ordered);
  }

  const Real max_growth = Real::from_double(1.5, bits);
  const Real min_growth = exp2i(-static_cast<long>(bits / 2), bits);
  const Real quarter = Real::from_double(0.25, bits);
  Real growth = Real::from_double(0.1, bits);  // r_next = r * (1 + growth)

  std::vector<std::vector<Complex>> out;
  for (const Real& target_raw : radii) {
    const Real target = target_raw.with_precision(bits);
    while (r < target) {
      Real r_next = r * (growth + 1);
      if (r_next > target) {
        r_next = target;
      }
      const std::vector<Complex> poly = kernel_polynomial(kernel, unit * r_next);
      // Cheap screen before the root solver: the Newton correction of every
      // old root must be small against its distance to the others.
      if (!newton_steps_small(poly, roots)) {
        growth = growth / 3;
        if (growth < min_growth) {
          throw BranchAmbiguityError("branch continuation stalled at |z| = " + r.to_string(20));
        }
        continue;
      }
      std::vector<Complex> fresh = polynomial_roots(poly, bits, roots).roots;
      // Every old root must have a clear nearest successor, all distinct.
      std::vector<Complex> matched;
      std::vector<bool> used(fresh.size(), false);
      bool ok = true;
      for (const Complex& old : roots) {
        auto [idx, ratio] = nearest(fresh, old);
        if (used[idx] || ratio > quarter) {
          ok = false;
          break;
        }
        used[idx] = true;
        matched.push_back(fresh[idx]);
      }
      if (!ok) {
        growth = growth / 3;
        if (growth < min_growth) {
          throw BranchAmbiguityError("branch continuation stalled at |z| = " + r.to_string(20));
        }
        continue;
      }
      roots = std::move(matched);
      r = r_next;
      growth = min(growth * 2, max_growth);
    }
    out.emplace_back(roots.begin(), roots.begin() + static_cast<long>(m));
  }
  return out;
}

std::vector<Complex> small_branch_values(const KernelForm& kernel, const Complex& z, unsigned precision_bits) {
  const Complex zz = z.with_precision(precision_bits);
  const Real modulus = abs(zz);
  if (modulus.is_zero()) {
    throw std::invalid_argument("small branches vanish at z = 0");
  }
  const std::vector<Real> radii{modulus};
  std::vector<Complex> tracked = track_small_branches(kernel, zz, radii, precision_bits).front();
  const BranchValue check = numeric_branches(kernel, zz, precision_bits);
  // The continued branches must be exactly the small roots found at z.
  const Real tolerance = exp2i(-static_cast<long>(precision_bits / 2), precision_bits);
  for (const Complex& u : tracked) {
    bool found = false;
    for (std::size_t i : check.small_indices) {
      found = found || abs(check.roots[i] - u) < tolerance;
    }
    if (!found) {
      throw BranchAmbiguityError("continued branch is not a small root at z = " + zz.to_string(20));
    }
  }
  return tracked;
}

RotationCheck verify_rotation_law(const Complex& z, unsigned precision_bits) {
  const unsigned bits = precision_bits;
  const KernelForm kernel = KernelForm::from_jumps(knuth_jumps());
  const Complex zz = z.with_precision(bits);
  const StructuralConstants sc = structural_constants(knuth_jumps(), bits);
  const Real slack = exp2i(-static_cast<long>(bits / 2), bits);
  const Real angle = arg(zz);
  const Real angle_max = pi(bits) - pi(bits) * 2 / 7;
  if (abs(zz) > sc.rho * (slack + 1) || angle.sign() <= 0 || angle >= angle_max) {
    throw std::invalid_argument("rotation law needs |z| <= rho and 0 < arg z < pi - 2 pi / 7");
  }
  const Complex omega = Complex::root_of_unity(1, 7, bits);
  const Complex omega_m3 = pow(omega, -3);

  const std::vector<Complex> at_z = small_branch_values(kernel, zz, bits);
  const std::vector<Complex> rotated = small_branch_values(kernel, omega * zz, bits);
  const std::vector<Complex> mirrored = small_branch_values(kernel, conj(zz), bits);

  RotationCheck out{zz,
                    abs(rotated[0] - omega_m3 * at_z[1]),
                    abs(rotated[1] - omega_m3 * at_z[0]),
                    abs(mirrored[0] - conj(at_z[0])),
                    abs(mirrored[1] - conj(at_z[1])),
                    slack * 10,
                    false};
  out.passed = out.rotation_residual_u1 < out.tolerance && out.rotation_residual_u2 < out.tolerance &&
               out.conjugation_residual_u1 < out.tolerance && out.conjugation_residual_u2 < out.tolerance;
  return out;
}

std::vector<Complex> rotation_sample_points(int count, unsigned precision_bits) {
  if (count < 1) {
    throw std::invalid_argument("need at least one sample point");
  }
  const unsigned bits = precision_bits;
  const Real rho = structural_constants(knuth_jumps(), bits).rho;
  const Real angle_max = pi(bits) * 5 / 7;
  std::vector<Complex> out;
  for (int j = 0; j < count; ++j) {
    // Golden-ratio stepping keeps the angles away from each other and off
    // the endpoints; moduli cycle through five levels.
    const Real frac = Real::from_double(std::fmod(0.5 + 0.6180339887498949 * j, 1.0) * 0.9 + 0.05, bits);
    const Real level = Real::from_double(0.2 + 0.1875 * (j % 5), bits);
    out.push_back(Complex::polar(rho * level, angle_max * frac));
  }
  return out;
}

}  // namespace slope_kernel
