#pragma once

#include <gmpxx.h>

#include <string>

namespace slope_kernel {

using BigInt = mpz_class;
using Rational = mpq_class;

// Exact binomial coefficient; zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

// Canonicalized num/den. Throws std::domain_error on a zero denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

// Parses "p" or "p/q" with an optional sign.
Rational parse_rational(const std::string& text);

}  // namespace slope_kernel
