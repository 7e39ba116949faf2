#include "slope_kernel/asymptotics.hpp"

#include "slope_kernel/arith.hpp"
#include "slope_kernel/enumerate.hpp"
#include "slope_kernel/kernel.hpp"
#include "slope_kernel/numeric.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace slope_kernel {
namespace {

using RealFn = std::function<Real(const Real&)>;

// Newton iteration kept inside [lo, hi], where f changes sign.
Real bracketed_newton(const RealFn& f, const RealFn& df, Real lo, Real hi, unsigned bits) {
  const int sign_lo = f(lo).sign();
  if (sign_lo == 0) {
    return lo;
  }
  if (sign_lo == f(hi).sign()) {
    throw std::invalid_argument("no sign change in the bracket");
  }
  const Real eps = exp2i(-static_cast<long>(bits) + 4, bits);
  Real x = (lo + hi) / 2;
  for (unsigned it = 0; it < 8 * bits; ++it) {
    const Real fx = f(x);
    if (fx.is_zero()) {
      return x;
    }
    (fx.sign() == sign_lo ? lo : hi) = x;
    const Real d = df(x);
    Real next = d.is_zero() ? (lo + hi) / 2 : x - fx / d;
    if (next <= lo || next >= hi) {
      next = (lo + hi) / 2;
    }
    const Real step = abs(next - x);
    x = next;
    if (step <= eps * max(abs(x), Real(1, bits))) {
      break;
    }
  }
  return x;
}

Real eval_laurent(const JumpSet& jumps, const Real& u, int derivative) {
  Real total(u.precision());
  for (const Jump& j : jumps.jumps()) {
    long factor = 1;
    for (int i = 0; i < derivative; ++i) {
      factor *= j.delta - i;
    }
    if (factor == 0) {
      continue;
    }
    total += pow(u, static_cast<long>(j.delta - derivative)) * factor * j.weight;
  }
  return total;
}

std::vector<Rational> tau2_polynomial() {
  std::vector<Rational> p(36, Rational(0));
  p[0] = 3125;
  p[7] = 37500;
  p[14] = 27708;
  p[21] = 13540;
  p[28] = 3900;
  p[35] = 500;
  return p;
}

std::vector<Rational> kappa1_polynomial() { return {-1, -1, -6, 10, -41, 23}; }
std::vector<Rational> kappa2_polynomial() { return {-142, 5180, -97580, 628250, -5363750, 11571875}; }

Real negative_kernel_root(const Real& rho, unsigned bits) {
  // rho (1 + u^7) - u^2 is increasing on u < 0, negative at -1, rho at 0.
  const RealFn f = [&](const Real& u) { return rho * (pow(u, 7) + 1) - u * u; };
  const RealFn df = [&](const Real& u) { return rho * pow(u, 6) * 7 - u * 2; };
  return bracketed_newton(f, df, Real(-1, bits), Real(0, bits), bits);
}

struct KappaCore {
  StructuralConstants sc;
  Real tau2;
  Real mu;
  Real alpha1;
  Real beta1;
  Real kappa1;
  Real kappa1_mu_form;
  Real kappa2;
};

KappaCore kappa_core(unsigned bits) {
  KappaCore k{structural_constants(knuth_jumps(), bits), Real(bits), Real(bits), Real(bits), Real(bits),
              Real(bits), Real(bits), Real(bits)};
  k.tau2 = negative_kernel_root(k.sc.rho, bits);
  const Real& mu = k.mu = k.tau2 / k.sc.tau;
  const Real s5 = sqrt(Real(5, bits));
  const Real mu2 = mu * mu;
  const Real mu3 = mu2 * mu;
  const Real mu4 = mu3 * mu;
  k.alpha1 = (mu4 + mu3 * 2 + mu2 * 3 + mu * 4 + 5) / s5;
  k.beta1 = s5 - k.alpha1;
  k.kappa1 = k.alpha1 / k.beta1;
  k.kappa1_mu_form = -5 / (mu4 + mu3 * 2 + mu2 * 3 + mu * 4) - 1;
  const Real& x = k.kappa1;
  k.kappa2 = (13 - x * 236 - pow(x, 2) * 194 - pow(x, 3) * 388 + pow(x, 4) * 437) * Rational(3, 9800);
  return k;
}

std::vector<Real> chebyshev_nodes(int count, const Real& h, int shift_num, int shift_den) {
  const unsigned bits = h.precision();
  std::vector<Real> x;
  for (int j = 0; j < count; ++j) {
    const Real theta = pi(bits) * (static_cast<long>(shift_den) * 2 * j + shift_num) / (2L * count * shift_den);
    x.push_back(h / 2 * (1 - cos(theta)));
  }
  return x;
}

template <typename T>
T horner(const std::vector<T>& c, const T& x) {
  T v = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    v = v * x + c[i];
  }
  return v;
}

std::vector<Real> fit_real(const std::vector<Real>& x, const std::vector<Real>& y) {
  std::vector<std::vector<Real>> a;
  for (const Real& xi : x) {
    std::vector<Real> row;
    Real p(1, xi.precision());
    for (std::size_t j = 0; j < x.size(); ++j) {
      row.push_back(p);
      p = p * xi;
    }
    a.push_back(std::move(row));
  }
  return solve_linear(std::move(a), y);
}

std::vector<Complex> fit_complex(const std::vector<Real>& x, const std::vector<Complex>& y) {
  std::vector<std::vector<Complex>> a;
  for (const Real& xi : x) {
    std::vector<Complex> row;
    Real p(1, xi.precision());
    for (std::size_t j = 0; j < x.size(); ++j) {
      row.emplace_back(p, Real(xi.precision()));
      p = p * xi;
    }
    a.push_back(std::move(row));
  }
  return solve_linear(std::move(a), y);
}

// u1, u2 at z = rho (1 - x^2): the smaller positive and the negative real
// kernel root.
std::pair<Real, Real> real_branches(const KernelForm& kernel, const Real& z, unsigned bits) {
  const std::vector<Complex> roots = kernel_roots(kernel, Complex(z, Real(bits)), bits);
  const Real tiny = exp2i(-static_cast<long>(bits) / 2, bits);
  std::vector<Real> positive;
  std::vector<Real> negative;
  for (const Complex& r : roots) {
    if (abs(r.im()) < tiny) {
      (r.re().sign() > 0 ? positive : negative).push_back(r.re());
    }
  }
  if (positive.empty() || negative.size() != 1) {
    throw std::runtime_error("unexpected real root pattern at z = " + z.to_string(20));
  }
  return {*std::min_element(positive.begin(), positive.end()), negative.front()};
}

}  // namespace

StructuralConstants structural_constants(const JumpSet& jumps, unsigned precision_bits) {
  const unsigned bits = precision_bits;
  if (bits < kMinPrecisionBits) {
    throw std::invalid_argument("precision below " + std::to_string(kMinPrecisionBits) +
                                " bits cannot certify the residuals");
  }
  const RealFn d1 = [&](const Real& u) { return eval_laurent(jumps, u, 1); };
  const RealFn d2 = [&](const Real& u) { return eval_laurent(jumps, u, 2); };
  // P' < 0 near 0 (negative jumps dominate) and > 0 for large u.
  Real lo(1, bits);
  Real hi(1, bits);
  while (d1(lo).sign() >= 0) {
    lo = lo / 2;
  }
  while (d1(hi).sign() <= 0) {
    hi = hi * 2;
  }
  StructuralConstants out{bracketed_newton(d1, d2, lo, hi, bits), Real(bits), Real(bits), Real(bits),
                          Real(bits), bits};
  out.p_at_tau = eval_laurent(jumps, out.tau, 0);
  out.rho = 1 / out.p_at_tau;
  out.derivative_residual = abs(d1(out.tau));
  out.rho_residual = abs(out.rho * out.p_at_tau - 1);
  return out;
}

Tau2Result tau2(unsigned precision_bits) {
  const unsigned bits = precision_bits;
  const StructuralConstants sc = structural_constants(knuth_jumps(), bits);
  Tau2Result out{negative_kernel_root(sc.rho, bits), Real(bits), Real(bits), Real(bits)};
  const std::vector<Rational> poly = tau2_polynomial();
  out.polynomial_residual = abs(evaluate(poly, out.value));
  const KernelForm kernel = KernelForm::from_jumps(knuth_jumps());
  auto gap = [&](const char* eps) {
    const Real z = sc.rho * (1 - Real::from_string(eps, bits));
    return abs(small_branch_values(kernel, Complex(z, Real(bits)), bits)[1] - Complex(out.value, Real(bits)));
  };
  out.branch_gap_1e8 = gap("1e-8");
  out.branch_gap_1e9 = gap("1e-9");
  const Real ratio = out.branch_gap_1e8 / out.branch_gap_1e9;
  if (out.branch_gap_1e8 > Real::from_double(1e-6, bits) || ratio < 5 || ratio > 20) {
    throw std::runtime_error("u2 near rho does not approach the negative kernel root (gap " +
                             out.branch_gap_1e8.to_string(6) + ")");
  }
  return out;
}

PuiseuxData puiseux_at_rho(unsigned precision_bits) {
  constexpr int kDegree = 36;
  const unsigned bits = precision_bits + 192;
  const KernelForm kernel = KernelForm::from_jumps(knuth_jumps());
  const StructuralConstants sc = structural_constants(knuth_jumps(), bits);
  const Real h = Real::from_double(0.2, bits);

  auto sample = [&](const Real& x) {
    const Real z = sc.rho * (1 - x * x);
    const auto [u1, u2] = real_branches(kernel, z, bits);
    const Real denom = z * (u1 - u2);
    const Real g1 = (pow(u1, 6) - pow(u2, 6)) / denom;
    const Real f0 = -(u1 * u2) * (pow(u1, 4) - pow(u2, 4)) / denom;
    return std::pair{g1, f0};
  };
  const std::vector<Real> nodes = chebyshev_nodes(kDegree + 1, h, 1, 1);
  std::vector<Real> gy;
  std::vector<Real> fy;
  for (const Real& x : nodes) {
    auto [g, f] = sample(x);
    gy.push_back(std::move(g));
    fy.push_back(std::move(f));
  }
  PuiseuxData out{fit_real(nodes, gy), fit_real(nodes, fy), Real(bits)};
  for (const Real& x : chebyshev_nodes(6, h, 1, 2)) {
    const auto [g, f] = sample(x);
    out.fit_residual = max(out.fit_residual, abs(horner(out.g, x) - g));
    out.fit_residual = max(out.fit_residual, abs(horner(out.f, x) - f));
  }
  for (auto* v : {&out.g, &out.f}) {
    for (Real& c : *v) {
      c = c.with_precision(precision_bits);
    }
  }
  out.fit_residual = out.fit_residual.with_precision(precision_bits);
  return out;
}

AsymptoticConstants knuth_constants(unsigned precision_bits) {
  const unsigned bits = precision_bits;
  if (bits < 128) {
    throw std::invalid_argument("knuth_constants needs at least 128 bits");
  }
  const KappaCore core = kappa_core(bits);
  const Real s5 = sqrt(Real(5, bits));
  AsymptoticConstants c;
  c.precision_bits = bits;
  c.tau = core.sc.tau;
  c.rho = core.sc.rho;
  c.p_at_tau = core.sc.p_at_tau;
  c.tau2 = core.tau2;
  c.mu = core.mu;
  c.alpha1 = core.alpha1;
  c.beta1 = core.beta1;
  c.kappa1 = core.kappa1;
  c.kappa1_mu_form = core.kappa1_mu_form;
  c.kappa2 = core.kappa2;

  auto ratio_kappa2 = [&](const Real& a2, const Real& b2) {
    return -(a2 * c.beta1 - c.alpha1 * b2) / (c.beta1 * c.beta1) * Rational(3, 14);
  };

  // Transfer of x and x^3 terms at the 7 conjugate singularities gives
  // alpha1 = -(7/2) rho^2 g1 and alpha2 = (7/2) rho^2 (g3 - g1/4).
  const PuiseuxData pd = puiseux_at_rho(bits);
  const Real scale = c.rho * c.rho * Rational(7, 2);
  const Real alpha1_local = -scale * pd.g[1];
  const Real beta1_local = -scale * pd.f[1];
  c.alpha2 = scale * (pd.g[3] - pd.g[1] / 4);
  c.beta2 = scale * (pd.f[3] - pd.f[1] / 4);
  c.kappa2_ratio_form = ratio_kappa2(c.alpha2, c.beta2);

  const Real& mu = c.mu;
  const Real t7 = pow(c.tau2, 7);
  const Real den = s5 * (t7 * 5 - 2);
  c.alpha2_display =
      -(t7 * 5 * (pow(mu, 4) * 13 + pow(mu, 3) * 22 + pow(mu, 2) * 29 + mu * 36 + 45)) / (den * 10) +
      (pow(mu, 4) * 15 + pow(mu, 3) * 20 + pow(mu, 2) * 13 - mu * 8 - 45) * 2 / den;
  c.beta2_display = -(s5 * Rational(9, 10)) - c.alpha2_display;
  c.kappa2_display_ratio = ratio_kappa2(c.alpha2_display, c.beta2_display);

  const Real rho7 = pow(c.rho, 7);
  c.residuals.emplace("tau", core.sc.derivative_residual);
  c.residuals.emplace("rho", core.sc.rho_residual);
  c.residuals.emplace("rho7", abs(rho7 - Real(Rational(12500, 823543), bits)));
  c.residuals.emplace("tau_closed_form", abs(pow(c.tau, 7) - Real(Rational(2, 5), bits)));
  c.residuals.emplace("tau2", abs(evaluate(tau2_polynomial(), c.tau2)));
  c.residuals.emplace("beta1", abs(c.alpha1 + c.beta1 - s5));
  c.residuals.emplace("kappa1_forms", abs(c.kappa1 - c.kappa1_mu_form));
  c.residuals.emplace("kappa2_forms", abs(c.kappa2 - c.kappa2_ratio_form));
  c.residuals.emplace("alpha1_local", abs(c.alpha1 - alpha1_local));
  c.residuals.emplace("beta1_local", abs(c.beta1 - beta1_local));
  c.residuals.emplace("alpha2_plus_beta2", abs(c.alpha2 + c.beta2 + s5 * Rational(31, 20)));
  c.residuals.emplace("local_fit", pd.fit_residual);

  const Real tight = exp2i(-static_cast<long>(bits) / 2, bits);
  const Real loose = Real::from_double(1e-20, bits);
  if (c.residuals.at("kappa1_forms") > tight) {
    throw std::runtime_error("kappa1: alpha1/beta1 and the mu form disagree");
  }
  if (c.residuals.at("alpha1_local") > loose || c.residuals.at("beta1_local") > loose) {
    throw std::runtime_error("local expansion at rho does not reproduce alpha1, beta1");
  }
  if (c.residuals.at("kappa2_forms") > loose) {
    throw std::runtime_error("kappa2: polynomial form and ratio form disagree");
  }

  c.findings.push_back("alpha2 and beta2 are taken from the local expansion of G_1 and F_0 at rho; with them "
                       "-(3/14)(alpha2 beta1 - alpha1 beta2)/beta1^2 reproduces kappa2");
  c.findings.push_back("the displayed closed form for alpha2, read as a plain sum, gives alpha2 = " +
                       c.alpha2_display.to_string(12) + " and, with beta2 = -(9/10) sqrt 5 - alpha2, kappa2 = " +
                       c.kappa2_display_ratio.to_string(12) + " instead of " + c.kappa2.to_string(12));
  c.findings.push_back("the local expansion gives alpha2 + beta2 = -(31/20) sqrt 5 = " +
                       (c.alpha2 + c.beta2).to_string(12) + ", which the binomial form of A_n + B_n confirms");
  return c;
}

MinimalPolynomialReport verify_minimal_polynomials(const Real& kappa1, const Real& kappa2, const Real& tau2_value,
                                                   unsigned precision_bits) {
  MinimalPolynomialReport r{Real(precision_bits), Real(precision_bits), Real(precision_bits), 0, 0, 0,
                            exp2i(-static_cast<long>(precision_bits) / 2, precision_bits), false};
  r.kappa1_residual = abs(evaluate(kappa1_polynomial(), kappa1));
  r.kappa2_residual = abs(evaluate(kappa2_polynomial(), kappa2 * Rational(7, 3)));
  r.tau2_residual = abs(evaluate(tau2_polynomial(), tau2_value));
  r.kappa1_real_roots = count_real_roots(kappa1_polynomial());
  r.kappa2_real_roots = count_real_roots(kappa2_polynomial());
  r.tau2_real_roots = count_real_roots(tau2_polynomial());
  r.passed = r.kappa1_residual < r.tolerance && r.kappa2_residual < r.tolerance && r.tau2_residual < r.tolerance &&
             r.kappa1_real_roots == 1 && r.kappa2_real_roots == 1 && r.tau2_real_roots == 1;
  return r;
}

MinimalPolynomialReport verify_minimal_polynomials(const AsymptoticConstants& constants) {
  return verify_minimal_polynomials(constants.kappa1, constants.kappa2, constants.tau2, constants.precision_bits);
}

LocalExpansion fit_local_expansion(int k, unsigned precision_bits, const LocalFitOptions& options) {
  if (k < 1 || k > 7) {
    throw std::invalid_argument("singularity index must be in 1..7");
  }
  if (options.degree < 4 || options.h <= 0 || options.h >= 0.5) {
    throw std::invalid_argument("local fit needs degree >= 4 and 0 < h < 0.5");
  }
  const unsigned bits = precision_bits + 160;
  const KernelForm kernel = KernelForm::from_jumps(knuth_jumps());
  const StructuralConstants sc = structural_constants(knuth_jumps(), bits);
  const Complex omega_k = Complex::root_of_unity(k, 7, bits);
  const Real h = Real::from_double(options.h, bits);

  const std::vector<Real> nodes = chebyshev_nodes(options.degree + 1, h, 1, 1);
  const std::vector<Real> checks = chebyshev_nodes(6, h, 1, 2);

  // One continuation pass over all radii, in ascending order.
  std::vector<std::pair<Real, std::size_t>> order;  // radius, index into nodes ++ checks
  for (std::size_t i = 0; i < nodes.size() + checks.size(); ++i) {
    const Real& x = i < nodes.size() ? nodes[i] : checks[i - nodes.size()];
    order.emplace_back(sc.rho * (1 - x * x), i);
  }
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Real> radii;
  for (const auto& o : order) {
    radii.push_back(o.first);
  }
  const auto tracked = track_small_branches(kernel, omega_k, radii, bits);
  std::vector<std::vector<Complex>> values(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    values[order[i].second] = tracked[i];
  }

  std::vector<Complex> y1;
  std::vector<Complex> y2;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    y1.push_back(values[i][0]);
    y2.push_back(values[i][1]);
  }
  std::vector<Complex> fit1 = fit_complex(nodes, y1);
  std::vector<Complex> fit2 = fit_complex(nodes, y2);

  Real residual(bits);
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const Complex x(checks[i], Real(bits));
    const auto& v = values[nodes.size() + i];
    residual = max(residual, abs(horner(fit1, x) - v[0]));
    residual = max(residual, abs(horner(fit2, x) - v[1]));
  }

  LocalExpansion out;
  out.k = k;
  out.zeta = (omega_k * sc.rho).with_precision(precision_bits);
  const bool first_singular = abs(fit1[1]) > abs(fit2[1]);
  out.singular_branch = first_singular ? 1 : 2;
  auto lower = [&](std::vector<Complex>& v) {
    for (Complex& c : v) {
      c = c.with_precision(precision_bits);
    }
    return v;
  };
  out.singular_coeffs = lower(first_singular ? fit1 : fit2);
  out.regular_coeffs = lower(first_singular ? fit2 : fit1);

  const unsigned pb = precision_bits;
  const Complex rot = Complex::root_of_unity(-3L * k, 7, pb);
  const Real tau = sc.tau.with_precision(pb);
  const Real t2 = negative_kernel_root(sc.rho, bits).with_precision(pb);
  const Real t27 = pow(t2, 7);
  out.c_fit = out.singular_coeffs[1];
  out.c_prime_fit = out.singular_coeffs[3];
  out.c_expected = rot * (-(tau / sqrt(Real(5, pb))));
  out.d_fit = out.regular_coeffs[2];
  out.d_expected = rot * (t2 * (t27 + 1) / (t27 * 5 - 2));
  out.c_error = abs(out.c_fit - out.c_expected);
  out.d_error = abs(out.d_fit - out.d_expected);
  out.fit_residual = residual.with_precision(pb);
  if (out.fit_residual > Real::from_double(1e-12, pb)) {
    throw std::runtime_error("local fit at zeta_" + std::to_string(k) + " misfits by " +
                             out.fit_residual.to_string(6));
  }
  return out;
}

RatioConvergence ratio_convergence(int n_max, unsigned precision_bits) {
  if (n_max < 8) {
    throw std::invalid_argument("ratio_convergence needs n_max >= 8");
  }
  const unsigned bits = precision_bits;
  const KappaCore core = kappa_core(bits);
  const std::vector<KnuthCounts> ab = knuth_AB_sequence(n_max);
  auto ratio = [&](int n) {
    const KnuthCounts& c = ab[static_cast<std::size_t>(n - 1)];
    return Real(make_rational(c.a, c.b), bits);
  };
  auto error = [&](int n) { return abs(ratio(n) - core.kappa1 + core.kappa2 / n); };

  RatioConvergence out{n_max, Real(bits), Real(bits), {}, Real(bits), false};
  std::vector<std::vector<Real>> design;
  std::vector<Real> y;
  const int lo = n_max / 4;
  for (int n = lo; n <= n_max; ++n) {
    const Real inv = Real(1, bits) / n;
    design.push_back({Real(1, bits), inv, inv * inv});
    y.push_back(ratio(n));
    out.scaled_error.emplace_back(n, error(n) * (static_cast<long>(n) * n));
  }
  const std::vector<Real> coef = least_squares(design, y);
  out.kappa1_est = coef[0];
  out.kappa2_est = -coef[1];
  out.decay_ratio = error(n_max / 2) / error(n_max);
  Real lower_max(bits);
  Real upper_max(bits);
  for (const auto& [n, e] : out.scaled_error) {
    Real& slot = 2 * n <= n_max + lo ? lower_max : upper_max;
    slot = max(slot, e);
  }
  out.bounded = upper_max.is_finite() && upper_max <= lower_max * 2;
  return out;
}

LeadingConstant leading_constant_check(int n_max, unsigned precision_bits) {
  if (n_max < 50) {
    throw std::invalid_argument("leading_constant_check needs n_max >= 50");
  }
  const unsigned bits = precision_bits;
  const std::vector<KnuthCounts> ab = knuth_AB_sequence(n_max);
  LeadingConstant out{n_max, sqrt(Real(5, bits) / (pi(bits) * 343)), Real(bits), Real(bits), {}};
  const Real rho7(Rational(12500, 823543), bits);
  Real power(1, bits);
  std::vector<std::vector<Real>> design;
  std::vector<Real> y;
  for (int n = 1; n <= n_max; ++n) {
    power = power * rho7;
    const Real nn(n, bits);
    const Real s = Real(ab[static_cast<std::size_t>(n - 1)].sum(), bits) * power * nn * sqrt(nn);
    out.scaled.emplace_back(n, s);
    if (2 * n >= n_max) {
      const Real inv = 1 / nn;
      design.push_back({Real(1, bits), inv, inv * inv});
      y.push_back(s);
    }
  }
  out.estimate = least_squares(design, y)[0];
  out.relative_error = abs(out.estimate - out.target) / out.target;
  return out;
}

DuchonAreaFit duchon_area_constant(int n_max, unsigned precision_bits) {
  if (n_max < 50 || n_max % 5 != 0) {
    throw std::invalid_argument("duchon_area_constant needs n_max >= 50, a multiple of 5");
  }
  const unsigned bits = precision_bits;
  const std::vector<ExcursionArea> profile = excursion_area_profile(duchon_jumps(), n_max);
  DuchonAreaFit out{n_max, Real(bits), Real(bits), Real(bits), sqrt(pi(bits) * 15) / 2, Real(bits), {}};
  std::vector<std::vector<Real>> design;
  std::vector<Real> y;
  for (int n = 5; n <= n_max; n += 5) {
    const ExcursionArea& e = profile[static_cast<std::size_t>(n)];
    const Real nn(n, bits);
    const Real mean(make_rational(e.twice_area, e.count * 2), bits);
    const Real r = mean / (nn * sqrt(nn));
    out.ratios.emplace_back(n, r);
    if (4 * n >= n_max) {
      design.push_back({Real(1, bits), 1 / sqrt(nn)});
      y.push_back(r);
    }
  }
  const std::vector<Real> coef = least_squares(design, y);
  out.c0 = coef[0];
  out.c1 = coef[1];
  out.k_est = out.c0 * sqrt(Real(5, bits));
  out.relative_error = abs(out.k_est - out.target) / out.target;
  return out;
}

}  // namespace slope_kernel
