#pragma once

#include "slope_kernel/arith.hpp"

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace slope_kernel {

inline constexpr unsigned kMinPrecisionBits = 64;
inline constexpr unsigned kDefaultPrecisionBits = 256;

// RAII wrapper around an MPFR float with an explicit working precision.
// Binary operations round to the larger precision of their operands.
class Real {
 public:
  explicit Real(unsigned precision_bits = kDefaultPrecisionBits);
  Real(long value, unsigned precision_bits);
  Real(const Rational& value, unsigned precision_bits);
  Real(const BigInt& value, unsigned precision_bits);

  static Real from_double(double value, unsigned precision_bits);
  // Decimal or scientific notation. Throws std::invalid_argument.
  static Real from_string(std::string_view text, unsigned precision_bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(value_)); }
  // Same value rounded to a new precision.
  Real with_precision(unsigned precision_bits) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }

  // `digits` significant decimal digits; fixed notation for moderate
  // exponents, scientific otherwise.
  std::string to_string(int digits) const;
  // Significant digits matching the precision.
  std::string to_string() const;

  Real& operator+=(const Real& other);
  Real& operator-=(const Real& other);
  Real& operator*=(const Real& other);
  Real& operator/=(const Real& other);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);

  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator-(long a, const Real& b);
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(long a, const Real& b);

  friend Real operator*(const Real& a, const Rational& b);
  friend Real operator+(const Real& a, const Rational& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b);

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real root(const Real& x, unsigned long k);  // real k-th root; odd k allows x < 0
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pi(unsigned precision_bits);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
// 2^e at the given precision.
Real exp2i(long e, unsigned precision_bits);

// Complex number with arbitrary-precision parts.
class Complex {
 public:
  explicit Complex(unsigned precision_bits = kDefaultPrecisionBits);
  Complex(Real re, Real im);
  explicit Complex(Real re);
  Complex(long re, long im, unsigned precision_bits);

  // r * e^{i theta}
  static Complex polar(const Real& r, const Real& theta);
  // e^{2 pi i num / den}
  static Complex root_of_unity(long num, long den, unsigned precision_bits);

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  unsigned precision() const;
  Complex with_precision(unsigned precision_bits) const;

  Complex& operator+=(const Complex& other);
  Complex& operator-=(const Complex& other);
  Complex& operator*=(const Complex& other);
  Complex& operator/=(const Complex& other);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return Complex(-a.re_, -a.im_); }
  friend Complex operator*(const Complex& a, const Real& s) { return Complex(a.re_ * s, a.im_ * s); }
  friend Complex operator*(const Real& s, const Complex& a) { return a * s; }
  friend Complex operator/(const Complex& a, const Real& s) { return Complex(a.re_ / s, a.im_ / s); }
  friend Complex operator*(const Complex& a, long s) { return Complex(a.re_ * s, a.im_ * s); }
  friend Complex operator+(const Complex& a, const Real& s) { return Complex(a.re_ + s, a.im_); }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  std::string to_string(int digits) const;

 private:
  Real re_;
  Real im_;
};

Complex conj(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real abs(const Complex& z);
Real arg(const Complex& z);   // in (-pi, pi]
Complex sqrt(const Complex& z);  // principal branch
Complex pow(const Complex& z, long n);
// Principal k-th root.
Complex root(const Complex& z, unsigned long k);

}  // namespace slope_kernel
