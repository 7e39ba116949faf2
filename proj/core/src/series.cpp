#include "slope_kernel/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace slope_kernel {
namespace {

void require_same_ramification(const TruncSeries& a, const TruncSeries& b) {
  if (a.ramification() != b.ramification()) {
    throw std::invalid_argument("mismatched ramification: " + std::to_string(a.ramification()) +
                                " vs " + std::to_string(b.ramification()));
  }
}

}  // namespace

TruncSeries::TruncSeries(unsigned ramification, std::size_t order)
    : ramification_(ramification), coeffs_(order + 1) {
  if (ramification == 0) {
    throw std::invalid_argument("ramification must be positive");
  }
}

TruncSeries::TruncSeries(unsigned ramification, std::size_t order, std::vector<Rational> coeffs)
    : TruncSeries(ramification, order) {
  if (coeffs.size() > order + 1) {
    throw std::invalid_argument("more coefficients than the truncation order allows");
  }
  std::move(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

TruncSeries TruncSeries::constant(unsigned ramification, std::size_t order, const Rational& c) {
  TruncSeries s(ramification, order);
  s.coeffs_[0] = c;
  return s;
}

TruncSeries TruncSeries::monomial(unsigned ramification, std::size_t order, std::size_t exponent,
                                  const Rational& c) {
  TruncSeries s(ramification, order);
  if (exponent <= order) {
    s.coeffs_[exponent] = c;
  }
  return s;
}

const Rational& TruncSeries::operator[](std::size_t i) const {
  if (i > order()) {
    throw std::out_of_range("coefficient " + std::to_string(i) + " beyond truncation order " +
                            std::to_string(order()));
  }
  return coeffs_[i];
}

std::size_t TruncSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) {
      return i;
    }
  }
  return coeffs_.size();
}

TruncSeries TruncSeries::truncated(std::size_t new_order) const {
  if (new_order > order()) {
    throw std::invalid_argument("cannot extend a truncated series");
  }
  return TruncSeries(ramification_, new_order,
                     std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

TruncSeries TruncSeries::shifted_up(std::size_t k) const {
  TruncSeries s(ramification_, order() + k);
  std::copy(coeffs_.begin(), coeffs_.end(), s.coeffs_.begin() + k);
  return s;
}

TruncSeries TruncSeries::shifted_down(std::size_t k) const {
  if (k > order()) {
    throw std::domain_error("shift exceeds truncation order");
  }
  if (valuation() < k) {
    throw std::domain_error("series is not divisible by t^" + std::to_string(k));
  }
  return TruncSeries(ramification_, order() - k,
                     std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

TruncSeries TruncSeries::negated_variable() const {
  TruncSeries s = *this;
  for (std::size_t i = 1; i < s.coeffs_.size(); i += 2) {
    s.coeffs_[i] = -s.coeffs_[i];
  }
  return s;
}

TruncSeries TruncSeries::deramified(unsigned factor) const {
  if (factor == 0 || ramification_ % factor != 0) {
    throw std::invalid_argument("factor must divide the ramification");
  }
  TruncSeries s(ramification_ / factor, order() / factor);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i % factor == 0) {
      s.coeffs_[i / factor] = coeffs_[i];
    } else if (sgn(coeffs_[i]) != 0) {
      throw std::domain_error("nonzero coefficient at t^" + std::to_string(i) +
                              " prevents deramification");
    }
  }
  return s;
}

TruncSeries TruncSeries::pow(unsigned exponent) const {
  TruncSeries result = constant(ramification_, order(), Rational(1));
  TruncSeries base = *this;
  while (exponent > 0) {
    if (exponent & 1U) {
      result = result * base;
    }
    exponent >>= 1U;
    if (exponent > 0) {
      base = base * base;
    }
  }
  return result;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
  require_same_ramification(*this, other);
  if (other.order() < order()) {
    coeffs_.resize(other.order() + 1);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other) {
  require_same_ramification(*this, other);
  if (other.order() < order()) {
    coeffs_.resize(other.order() + 1);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] -= other.coeffs_[i];
  }
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& scalar) {
  for (Rational& c : coeffs_) {
    c *= scalar;
  }
  return *this;
}

TruncSeries operator-(const TruncSeries& a) {
  TruncSeries s = a;
  for (Rational& c : s.coeffs_) {
    c = -c;
  }
  return s;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  require_same_ramification(a, b);
  const std::size_t order = std::min(a.order(), b.order());
  TruncSeries s(a.ramification(), order);
  // Kernel series are sparse (supported on residue classes), so zero
  // coefficients are skipped up front.
  std::vector<std::size_t> nz_b;
  for (std::size_t j = 0; j <= order; ++j) {
    if (sgn(b.coeffs_[j]) != 0) {
      nz_b.push_back(j);
    }
  }
  Rational term;
  for (std::size_t i = 0; i <= order; ++i) {
    if (sgn(a.coeffs_[i]) == 0) {
      continue;
    }
    for (std::size_t j : nz_b) {
      if (i + j > order) {
        break;
      }
      mpq_mul(term.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      s.coeffs_[i + j] += term;
    }
  }
  return s;
}

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) { return a + b; }

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) { return a * b; }

TruncSeries series_div_unit(const TruncSeries& a, const TruncSeries& b) {
  require_same_ramification(a, b);
  const std::size_t v = b.valuation();
  if (v > b.order()) {
    throw std::domain_error("division by a series that vanishes to its truncation order");
  }
  TruncSeries num = a;
  TruncSeries den = b;
  if (v > 0) {
    if (a.valuation() < v) {
      throw std::domain_error("unremovable zero leading coefficient in divisor");
    }
    num = a.shifted_down(v);
    den = b.shifted_down(v);
  }
  const std::size_t order = std::min(num.order(), den.order());
  std::vector<Rational> q(order + 1);
  const Rational inv_lead = 1 / den[0];
  Rational acc;
  Rational term;
  for (std::size_t n = 0; n <= order; ++n) {
    acc = num[n];
    for (std::size_t j = 1; j <= n; ++j) {
      if (sgn(den[j]) == 0 || sgn(q[n - j]) == 0) {
        continue;
      }
      mpq_mul(term.get_mpq_t(), den[j].get_mpq_t(), q[n - j].get_mpq_t());
      acc -= term;
    }
    q[n] = acc * inv_lead;
  }
  return TruncSeries(a.ramification(), order, std::move(q));
}

}  // namespace slope_kernel
