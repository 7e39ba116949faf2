#include "slope_kernel/identities.hpp"

#include "slope_kernel/enumerate.hpp"
#include "slope_kernel/jump_set.hpp"
#include "slope_kernel/kernel.hpp"

#include <numeric>
#include <stdexcept>

namespace slope_kernel {
namespace {

BigInt exact_quotient(const BigInt& num, const BigInt& den, const char* what) {
  if (den == 0 || num % den != 0) {
    throw std::logic_error(std::string(what) + ": division is not exact");
  }
  return num / den;
}

void fail(IdentityReport& report, std::string what) {
  if (report.passed) {
    report.counterexample = std::move(what);
  }
  report.passed = false;
}

BigInt coefficient_as_integer(const TruncSeries& s, std::size_t i) {
  const Rational& q = s[i];
  if (q.get_den() != 1) {
    throw std::logic_error("non-integral series coefficient at index " + std::to_string(i));
  }
  return q.get_num();
}

}  // namespace

BigInt aplusb_closed_form(int n) {
  if (n < 1) {
    throw std::invalid_argument("aplusb_closed_form needs n >= 1");
  }
  const auto top = static_cast<unsigned long>(7 * n - 1);
  return exact_quotient(2 * binomial(top, static_cast<unsigned long>(2 * n)), BigInt(top), "aplusb");
}

IdentityReport verify_aplusb(int n_max) {
  if (n_max < 1) {
    throw std::invalid_argument("n_max must be >= 1");
  }
  IdentityReport report{"aplusb", 1, n_max, true, {}, {}, {}};
  const std::vector<KnuthCounts> ab = knuth_AB_sequence(n_max);
  for (int n = 1; n <= n_max; ++n) {
    const BigInt lhs = ab[static_cast<std::size_t>(n - 1)].sum();
    const BigInt rhs = aplusb_closed_form(n);
    if (lhs != rhs) {
      fail(report, "n=" + std::to_string(n) + ": A+B=" + lhs.get_str() + " closed form=" + rhs.get_str());
    }
  }
  return report;
}

IdentityReport verify_hypergeometric_recurrence(int n_max) {
  if (n_max < 2) {
    throw std::invalid_argument("n_max must be >= 2");
  }
  IdentityReport report{"recurrence", 1, n_max - 1, true, {}, {}, {}};
  const std::vector<KnuthCounts> ab = knuth_AB_sequence(n_max);
  for (int n = 1; n < n_max; ++n) {
    const BigInt cn = ab[static_cast<std::size_t>(n - 1)].sum();
    const BigInt cn1 = ab[static_cast<std::size_t>(n)].sum();
    const BigInt b = n;
    const BigInt lhs = 10 * (5 * b + 4) * (5 * b + 3) * (5 * b + 2) * (5 * b + 1) * (2 * b + 1) * (b + 1) * cn1;
    const BigInt rhs = 7 * (7 * b + 5) * (7 * b + 4) * (7 * b + 3) * (7 * b + 2) * (7 * b + 1) * (7 * b - 1) * cn;
    if (lhs != rhs) {
      fail(report, "n=" + std::to_string(n) + ": C(n+1)/C(n) differs from the hypergeometric ratio");
    }
  }
  return report;
}

IdentityReport verify_series_vs_dp(int order) {
  if (order < 0) {
    throw std::invalid_argument("order must be >= 0");
  }
  IdentityReport report{"series-vs-dp", 0, order, true, {}, {}, {}};
  const auto ord = static_cast<std::size_t>(order);
  const KnuthSeries series = series_F0_G1(ord);
  const std::vector<BigInt> f0 = endpoint_counts(knuth_jumps(), 3, 0, 0, order);
  const std::vector<BigInt> g1 = endpoint_counts(knuth_jumps(), 4, 0, 1, order);
  for (std::size_t n = 0; n <= ord; ++n) {
    if (series.f0[n] != Rational(f0[n])) {
      fail(report, "F0 at z^" + std::to_string(n) + ": series " + series.f0[n].get_str() + " walks " +
                       f0[n].get_str());
    }
    if (series.g1[n] != Rational(g1[n])) {
      fail(report, "G1 at z^" + std::to_string(n) + ": series " + series.g1[n].get_str() + " walks " +
                       g1[n].get_str());
    }
  }
  return report;
}

IdentityReport verify_sym_power(int n_max) {
  if (n_max < 1) {
    throw std::invalid_argument("n_max must be >= 1");
  }
  IdentityReport report{"sym-power", 1, n_max, true, {}, {}, {}};
  const TruncSeries s = sym_power_series(static_cast<std::size_t>(7 * n_max - 1));
  const std::vector<KnuthCounts> ab = knuth_AB_sequence(n_max);
  for (int n = 1; n <= n_max; ++n) {
    const BigInt series_value = coefficient_as_integer(s, static_cast<std::size_t>(7 * n - 1));
    const BigInt walks = ab[static_cast<std::size_t>(n - 1)].sum();
    const BigInt closed = aplusb_closed_form(n);
    if (series_value != walks || walks != closed) {
      fail(report, "n=" + std::to_string(n) + ": series " + series_value.get_str() + " walks " +
                       walks.get_str() + " closed form " + closed.get_str());
    }
  }
  return report;
}

BigInt thm61_sum(int a, int c, int s, int l) {
  if (a <= 0 || a >= c) {
    throw std::invalid_argument("thm61_sum needs 0 < a < c");
  }
  if (s < 1 || l < 0) {
    throw std::invalid_argument("thm61_sum needs s >= 1 and l >= 0");
  }
  if ((l + 1) * a >= c) {
    throw std::invalid_argument("thm61_sum needs (l + 1) a < c");
  }
  const long top = static_cast<long>(a + c) * s + l - 1;
  const BigInt num = BigInt(static_cast<long>(l) * a + c) *
                     binomial(static_cast<unsigned long>(top), static_cast<unsigned long>(a * s - 1));
  return exact_quotient(num, BigInt(top), "thm61_sum");
}

IdentityReport verify_thm61(int a, int c, int s_max) {
  if (a <= 0 || a >= c || s_max < 1) {
    throw std::invalid_argument("verify_thm61 needs 0 < a < c and s_max >= 1");
  }
  auto run = [&](bool touching) {
    IdentityReport report{"thm61", 1, s_max, true, {}, touching ? "touching" : "strict", {}};
    for (int s = 1; s <= s_max; ++s) {
      const LatticePoint end{c * s - 1, a * s - 1};
      for (int l = 0; (l + 1) * a < c; ++l) {
        BigInt brute = 0;
        for (int k = l * a + 1; k <= (l + 1) * a; ++k) {
          brute += count_ne_below_line(a, c, k, end, touching);
        }
        const BigInt formula = thm61_sum(a, c, s, l);
        if (brute != formula) {
          fail(report, "a=" + std::to_string(a) + " c=" + std::to_string(c) + " s=" + std::to_string(s) +
                           " l=" + std::to_string(l) + ": paths " + brute.get_str() + " formula " +
                           formula.get_str());
        }
      }
    }
    return report;
  };
  IdentityReport report = run(false);
  if (!report.passed) {
    IdentityReport touching = run(true);
    touching.notes.push_back("strict convention failed (" + report.counterexample.value_or("") +
                             "); retried with touching allowed");
    report = std::move(touching);
  }
  report.notes.push_back("the hypothesis that b is a multiple of a does not enter the formula; "
                         "it is not used by this check");
  return report;
}

}  // namespace slope_kernel
