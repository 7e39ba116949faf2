#pragma once

#include "slope_kernel/arith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace slope_kernel {

struct IdentityReport {
  std::string identity;
  int from = 0;
  int to = 0;
  bool passed = true;
  std::optional<std::string> counterexample;  // first failure, human readable
  std::string convention;                     // thm61 only: "strict" or "touching"
  std::vector<std::string> notes;
};

// 2/(7n-1) * binomial(7n-1, 2n). Throws std::invalid_argument for n < 1 and
// std::logic_error if the division is not exact.
BigInt aplusb_closed_form(int n);

// A_n + B_n from the walk counts against the binomial form, n = 1..n_max.
IdentityReport verify_aplusb(int n_max);

// 10 (5n+4)(5n+3)(5n+2)(5n+1)(2n+1)(n+1) C_{n+1}
//   = 7 (7n+5)(7n+4)(7n+3)(7n+2)(7n+1)(7n-1) C_n
// for C_n = A_n + B_n taken from the walk counts, all 1 <= n < n_max.
IdentityReport verify_hypergeometric_recurrence(int n_max);

// Coefficients of the kernel-method series F_0, G_1 against meander counts
// for all lengths 0..order.
IdentityReport verify_series_vs_dp(int order);

// [z^(7n-1)] (u1^5 + u2^5) against the walk counts and the binomial form.
IdentityReport verify_sym_power(int n_max);

// (l a + c) / ((a + c) s + l - 1) * binomial((a + c) s + l - 1, a s - 1).
// Requires 0 < a < c, s >= 1, l >= 0 and (l + 1) a < c.
BigInt thm61_sum(int a, int c, int s, int l);

// Sum over k = l a + 1 .. (l + 1) a of the North/East paths from the origin
// to (c s - 1, a s - 1) below c y = a x + k, compared with thm61_sum for all
// valid l and s = 1..s_max. The strict convention is tried first; the
// touching one only if strict fails.
IdentityReport verify_thm61(int a, int c, int s_max);

}  // namespace slope_kernel
