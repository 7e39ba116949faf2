#include "slope_kernel/real.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <stdexcept>
#include <string>

namespace slope_kernel {
namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

unsigned checked_bits(unsigned bits) {
  if (bits < kMinPrecisionBits) {
    throw std::invalid_argument("precision must be at least " + std::to_string(kMinPrecisionBits) +
                                " bits");
  }
  return bits;
}

unsigned wider(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Real::Real(unsigned precision_bits) {
  mpfr_init2(value_, checked_bits(precision_bits));
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, unsigned precision_bits) : Real(precision_bits) {
  mpfr_set_si(value_, value, kRound);
}

Real::Real(const Rational& value, unsigned precision_bits) : Real(precision_bits) {
  mpfr_set_q(value_, value.get_mpq_t(), kRound);
}

Real::Real(const BigInt& value, unsigned precision_bits) : Real(precision_bits) {
  mpfr_set_z(value_, value.get_mpz_t(), kRound);
}

Real Real::from_double(double value, unsigned precision_bits) {
  Real r(precision_bits);
  mpfr_set_d(r.value_, value, kRound);
  return r;
}

Real Real::from_string(std::string_view text, unsigned precision_bits) {
  Real r(precision_bits);
  std::string s(text);
  if (s.empty()) {
    throw std::invalid_argument("empty real");
  }
  char* end = nullptr;
  mpfr_strtofr(r.value_, s.c_str(), &end, 10, kRound);
  if (end != s.c_str() + s.size()) {
    throw std::invalid_argument("malformed real: '" + s + "'");
  }
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRound);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRound);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::with_precision(unsigned precision_bits) const {
  Real r(precision_bits);
  mpfr_set(r.value_, value_, kRound);
  return r;
}

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(value_)) {
    return "nan";
  }
  if (mpfr_inf_p(value_)) {
    return sign() > 0 ? "inf" : "-inf";
  }
  if (is_zero()) {
    return "0";
  }
  mpfr_exp_t exponent = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exponent, 10, static_cast<std::size_t>(std::max(digits, 2)), value_, kRound),
      mpfr_free_str);
  std::string mantissa(raw.get());
  std::string prefix;
  if (mantissa.front() == '-') {
    prefix = "-";
    mantissa.erase(mantissa.begin());
  }
  // value = 0.mantissa * 10^exponent
  if (exponent <= 0 && exponent > -20) {
    return prefix + "0." + std::string(static_cast<std::size_t>(-exponent), '0') + mantissa;
  }
  if (exponent > 0 && exponent <= 40) {
    const auto e = static_cast<std::size_t>(exponent);
    if (e >= mantissa.size()) {
      return prefix + mantissa + std::string(e - mantissa.size(), '0');
    }
    return prefix + mantissa.substr(0, e) + "." + mantissa.substr(e);
  }
  return prefix + mantissa.substr(0, 1) + "." + mantissa.substr(1) + "e" +
         std::to_string(static_cast<long>(exponent) - 1);
}

std::string Real::to_string() const {
  // floor(bits * log10(2))
  return to_string(static_cast<int>(precision() * 30103UL / 100000UL));
}

Real& Real::operator+=(const Real& other) { return *this = *this + other; }
Real& Real::operator-=(const Real& other) { return *this = *this - other; }
Real& Real::operator*=(const Real& other) { return *this = *this * other; }
Real& Real::operator/=(const Real& other) { return *this = *this / other; }

Real operator+(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_add(r.value_, a.value_, b.value_, kRound);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, kRound);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, kRound);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_div(r.value_, a.value_, b.value_, kRound);
  return r;
}

Real operator-(const Real& a) {
  Real r(a.precision());
  mpfr_neg(r.value_, a.value_, kRound);
  return r;
}

Real operator+(const Real& a, long b) {
  Real r(a.precision());
  mpfr_add_si(r.value_, a.value_, b, kRound);
  return r;
}

Real operator-(const Real& a, long b) {
  Real r(a.precision());
  mpfr_sub_si(r.value_, a.value_, b, kRound);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r(a.precision());
  mpfr_mul_si(r.value_, a.value_, b, kRound);
  return r;
}

Real operator/(const Real& a, long b) {
  Real r(a.precision());
  mpfr_div_si(r.value_, a.value_, b, kRound);
  return r;
}

Real operator-(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_sub(r.value_, a, b.value_, kRound);
  return r;
}

Real operator/(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_div(r.value_, a, b.value_, kRound);
  return r;
}

Real operator*(const Real& a, const Rational& b) {
  Real r(a.precision());
  mpfr_mul_q(r.value_, a.value_, b.get_mpq_t(), kRound);
  return r;
}

Real operator+(const Real& a, const Rational& b) {
  Real r(a.precision());
  mpfr_add_q(r.value_, a.value_, b.get_mpq_t(), kRound);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) {
    return std::partial_ordering::unordered;
  }
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.value_)) {
    return std::partial_ordering::unordered;
  }
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real abs(const Real& x) {
  Real r(x.precision());
  mpfr_abs(r.get(), x.get(), kRound);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x.precision());
  mpfr_sqrt(r.get(), x.get(), kRound);
  return r;
}

Real root(const Real& x, unsigned long k) {
  Real r(x.precision());
  mpfr_rootn_ui(r.get(), x.get(), k, kRound);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r(wider(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), kRound);
  return r;
}

Real pow(const Real& x, long n) {
  Real r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, kRound);
  return r;
}

Real exp(const Real& x) {
  Real r(x.precision());
  mpfr_exp(r.get(), x.get(), kRound);
  return r;
}

Real log(const Real& x) {
  Real r(x.precision());
  mpfr_log(r.get(), x.get(), kRound);
  return r;
}

Real sin(const Real& x) {
  Real r(x.precision());
  mpfr_sin(r.get(), x.get(), kRound);
  return r;
}

Real cos(const Real& x) {
  Real r(x.precision());
  mpfr_cos(r.get(), x.get(), kRound);
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r(wider(x, y));
  mpfr_atan2(r.get(), y.get(), x.get(), kRound);
  return r;
}

Real pi(unsigned precision_bits) {
  Real r(precision_bits);
  mpfr_const_pi(r.get(), kRound);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real exp2i(long e, unsigned precision_bits) {
  Real r(1, precision_bits);
  mpfr_mul_2si(r.get(), r.get(), e, kRound);
  return r;
}

Complex::Complex(unsigned precision_bits) : re_(precision_bits), im_(precision_bits) {}

Complex::Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

Complex::Complex(Real re) : re_(std::move(re)), im_(re_.precision()) {}

Complex::Complex(long re, long im, unsigned precision_bits)
    : re_(re, precision_bits), im_(im, precision_bits) {}

Complex Complex::polar(const Real& r, const Real& theta) {
  return Complex(r * cos(theta), r * sin(theta));
}

Complex Complex::root_of_unity(long num, long den, unsigned precision_bits) {
  Real theta = pi(precision_bits) * (2 * num) / den;
  return Complex(cos(theta), sin(theta));
}

unsigned Complex::precision() const { return std::max(re_.precision(), im_.precision()); }

Complex Complex::with_precision(unsigned precision_bits) const {
  return Complex(re_.with_precision(precision_bits), im_.with_precision(precision_bits));
}

Complex& Complex::operator+=(const Complex& other) {
  re_ += other.re_;
  im_ += other.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& other) {
  re_ -= other.re_;
  im_ -= other.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& other) {
  Real re = re_ * other.re_ - im_ * other.im_;
  Real im = re_ * other.im_ + im_ * other.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex& Complex::operator/=(const Complex& other) {
  const Real d = norm(other);
  if (d.is_zero()) {
    throw std::domain_error("complex division by zero");
  }
  Real re = (re_ * other.re_ + im_ * other.im_) / d;
  Real im = (im_ * other.re_ - re_ * other.im_) / d;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string Complex::to_string(int digits) const {
  std::string im = im_.to_string(digits);
  if (im.front() == '-') {
    return re_.to_string(digits) + " - " + im.substr(1) + "i";
  }
  return re_.to_string(digits) + " + " + im + "i";
}

Complex conj(const Complex& z) { return Complex(z.re(), -z.im()); }

Real norm(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }

Real abs(const Complex& z) {
  Real r(z.precision());
  mpfr_hypot(r.get(), z.re().get(), z.im().get(), MPFR_RNDN);
  return r;
}

Real arg(const Complex& z) { return atan2(z.im(), z.re()); }

Complex sqrt(const Complex& z) {
  const Real r = abs(z);
  Real re = sqrt((r + z.re()) / 2);
  Real im = sqrt((r - z.re()) / 2);
  if (z.im().sign() < 0) {
    im = -im;
  }
  return Complex(std::move(re), std::move(im));
}

Complex pow(const Complex& z, long n) {
  if (n < 0) {
    return Complex(1, 0, z.precision()) / pow(z, -n);
  }
  Complex result(1, 0, z.precision());
  Complex base = z;
  while (n > 0) {
    if (n & 1) {
      result *= base;
    }
    n >>= 1;
    if (n > 0) {
      base *= base;
    }
  }
  return result;
}

Complex root(const Complex& z, unsigned long k) {
  if (abs(z).is_zero()) {
    return Complex(z.precision());
  }
  const Real r = root(abs(z), k);
  return Complex::polar(r, arg(z) / static_cast<long>(k));
}

}  // namespace slope_kernel
