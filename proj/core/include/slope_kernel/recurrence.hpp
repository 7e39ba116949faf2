#pragma once

#include "slope_kernel/arith.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace slope_kernel {

// Linear recurrence with polynomial coefficients, stored in the form
//   c_0(n) a_{n+r} = c_1(n) a_{n+r-1} + ... + c_r(n) a_n
// for every index n >= offset (the index of the first supplied term).
struct PRecurrence {
  int order = 0;
  int degree = 0;
  int offset = 0;
  // coeffs[i][j] is the coefficient of n^j in c_i(n); integers with
  // content 1 and c_0 of positive leading coefficient.
  std::vector<std::vector<Rational>> coeffs;

  Rational c(int i, const BigInt& n) const;

  // Value of a_{n+r} predicted from the r preceding terms.
  Rational predict(const std::vector<BigInt>& terms, int n) const;

  // Every window of the sequence satisfies the relation exactly.
  bool holds_on(const std::vector<BigInt>& terms) const;

  std::string to_string() const;
};

class InsufficientTermsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Terms needed by guess_precurrence for the given bounds.
std::size_t required_terms(int max_order, int max_degree);

struct GuessOptions {
  int max_order = 5;
  int max_degree = 10;
  int offset = 1;  // index of terms[0]
};

// Smallest recurrence (by order, then degree) of the sequence. The first
// two thirds of the terms are used for the fit; the remaining third must
// satisfy the candidate exactly or the candidate is discarded.
//
// Existence is decided by linear algebra modulo word-sized primes: full
// column rank modulo one prime proves that no recurrence of that shape
// exists over Q. Candidates are lifted by Chinese remaindering and
// rational reconstruction, then checked in exact integer arithmetic.
//
// Throws InsufficientTermsError when terms.size() < required_terms().
std::optional<PRecurrence> guess_precurrence(const std::vector<BigInt>& terms, const GuessOptions& options);

}  // namespace slope_kernel
