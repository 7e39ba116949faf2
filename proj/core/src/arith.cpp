#include "slope_kernel/arith.hpp"

#include <stdexcept>

namespace slope_kernel {

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt result;
  if (k > n) {
    return result;
  }
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw std::domain_error("zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational");
  }
  std::string body = text;
  if (body.front() == '+') {
    body.erase(body.begin());
  }
  Rational q;
  if (q.set_str(body, 10) != 0) {
    throw std::invalid_argument("malformed rational: " + text);
  }
  if (q.get_den() == 0) {
    throw std::domain_error("zero denominator: " + text);
  }
  q.canonicalize();
  return q;
}

}  // namespace slope_kernel
