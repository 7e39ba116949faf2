#pragma once

#include "slope_kernel/arith.hpp"

#include <cstddef>
#include <vector>

namespace slope_kernel {

// Truncated power series with exact rational coefficients in a variable t,
// where the underlying variable is z = t^q (q is the ramification).
//
// Coefficients 0..order() are exact; nothing beyond order() is ever
// reported. Binary operations keep the smaller of the two orders.
class TruncSeries {
 public:
  TruncSeries(unsigned ramification, std::size_t order);
  TruncSeries(unsigned ramification, std::size_t order, std::vector<Rational> coeffs);

  static TruncSeries constant(unsigned ramification, std::size_t order, const Rational& c);
  // c * t^exponent; zero when exponent > order.
  static TruncSeries monomial(unsigned ramification, std::size_t order, std::size_t exponent,
                              const Rational& c = Rational(1));

  unsigned ramification() const { return ramification_; }
  std::size_t order() const { return coeffs_.size() - 1; }

  // Throws std::out_of_range past order().
  const Rational& operator[](std::size_t i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Index of the first nonzero coefficient, or order() + 1 for zero.
  std::size_t valuation() const;
  bool is_zero() const { return valuation() > order(); }

  TruncSeries truncated(std::size_t new_order) const;

  // Multiply by t^k; the order grows by k.
  TruncSeries shifted_up(std::size_t k) const;
  // Exact division by t^k; requires valuation() >= k. The order drops by k.
  TruncSeries shifted_down(std::size_t k) const;

  // f(t) -> f(-t).
  TruncSeries negated_variable() const;

  // Re-expresses a series in t (z = t^q) as a series in s = t^factor,
  // so the ramification becomes q / factor. Every coefficient at an
  // exponent not divisible by `factor` must vanish.
  TruncSeries deramified(unsigned factor) const;

  TruncSeries pow(unsigned exponent) const;

  TruncSeries& operator+=(const TruncSeries& other);
  TruncSeries& operator-=(const TruncSeries& other);
  TruncSeries& operator*=(const Rational& scalar);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator-(const TruncSeries& a);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(TruncSeries a, const Rational& s) { return a *= s; }
  friend TruncSeries operator*(const Rational& s, TruncSeries a) { return a *= s; }

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  unsigned ramification_;
  std::vector<Rational> coeffs_;
};

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

// a / b. When b has a zero constant term, its valuation v must be matched
// by a (valuation(a) >= v); the common factor t^v is cancelled and the
// result order drops by v. Throws std::domain_error otherwise, and
// std::invalid_argument on mismatched ramification.
TruncSeries series_div_unit(const TruncSeries& a, const TruncSeries& b);

}  // namespace slope_kernel
