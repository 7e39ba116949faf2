#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library: walks and lattice paths are enumerated one by
// one, binomials come from Pascal's triangle.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace oracle {

// Visits every jump sequence of the given length (depth first) that keeps
// the altitude >= floor when a floor is given; calls visit with the
// altitude sequence.
inline void for_each_walk(const std::vector<int>& deltas, int start, std::optional<int> floor, int length,
                          const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> alt{start};
  std::function<void()> rec = [&] {
    if (static_cast<int>(alt.size()) == length + 1) {
      visit(alt);
      return;
    }
    for (int d : deltas) {
      const int next = alt.back() + d;
      if (floor && next < *floor) {
        continue;
      }
      alt.push_back(next);
      rec();
      alt.pop_back();
    }
  };
  if (!floor || start >= *floor) {
    rec();
  }
}

inline mpz_class count_walks(const std::vector<int>& deltas, int start, std::optional<int> floor, int end,
                             int length) {
  mpz_class total = 0;
  for_each_walk(deltas, start, floor, length, [&](const std::vector<int>& a) {
    if (a.back() == end) {
      ++total;
    }
  });
  return total;
}

struct AreaTotals {
  mpz_class count = 0;
  mpz_class twice_area = 0;
};

inline AreaTotals excursion_area(const std::vector<int>& deltas, int length) {
  AreaTotals t;
  for_each_walk(deltas, 0, 0, length, [&](const std::vector<int>& a) {
    if (a.back() != 0) {
      return;
    }
    ++t.count;
    for (std::size_t i = 1; i < a.size(); ++i) {
      t.twice_area += a[i - 1] + a[i];
    }
  });
  return t;
}

// North/East paths with `east` East steps and `north` North steps whose
// every point satisfies c y < a x + k (or <= when touching).
inline mpz_class count_ne_paths(int a, int c, int k, int east, int north, bool touching) {
  const int n = east + north;
  mpz_class total = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != north) {
      continue;
    }
    long x = 0;
    long y = 0;
    auto ok = [&] { return touching ? c * y <= a * x + k : c * y < a * x + k; };
    bool good = ok();
    for (int i = 0; i < n && good; ++i) {
      ((mask >> i) & 1u) ? ++y : ++x;
      good = ok();
    }
    if (good) {
      ++total;
    }
  }
  return total;
}

inline std::vector<std::vector<mpz_class>> pascal(int rows) {
  std::vector<std::vector<mpz_class>> t(static_cast<std::size_t>(rows) + 1);
  for (int n = 0; n <= rows; ++n) {
    auto& r = t[static_cast<std::size_t>(n)];
    r.assign(static_cast<std::size_t>(n) + 1, 1);
    for (int k = 1; k < n; ++k) {
      r[static_cast<std::size_t>(k)] =
          t[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] + t[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
    }
  }
  return t;
}

}  // namespace oracle
