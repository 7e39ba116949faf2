#include "slope_kernel/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace slope_kernel {
namespace {

void require_unit_weights(const JumpSet& jumps) {
  if (!jumps.unit_weights()) {
    throw std::invalid_argument("this enumeration supports unit weights only");
  }
}

void require_length(int n_max) {
  if (n_max < 0) {
    throw std::invalid_argument("n_max must be nonnegative");
  }
}

// Altitude window of the row after one more step.
std::pair<int, int> next_window(int lo, int hi, const JumpSet& jumps, std::optional<int> floor) {
  int next_lo = lo + jumps.min_delta();
  const int next_hi = hi + jumps.max_delta();
  if (floor) {
    next_lo = std::max(next_lo, *floor);
  }
  return {next_lo, std::max(next_lo, next_hi)};
}

}  // namespace

CountTable::CountTable(JumpSet jumps, int start, std::optional<int> floor, std::vector<Row> rows)
    : jumps_(std::move(jumps)), start_(start), floor_(floor), rows_(std::move(rows)) {}

const CountTable::Row& CountTable::row(int n) const {
  if (n < 0 || n > n_max()) {
    throw std::out_of_range("length " + std::to_string(n) + " outside the table");
  }
  return rows_[static_cast<std::size_t>(n)];
}

Rational CountTable::count(int n, int k) const {
  const Row& r = row(n);
  const long idx = static_cast<long>(k) - r.lo;
  if (idx < 0 || idx >= static_cast<long>(r.v.size())) {
    return Rational(0);
  }
  return r.v[static_cast<std::size_t>(idx)];
}

int CountTable::min_altitude(int n) const { return row(n).lo; }

int CountTable::max_altitude(int n) const {
  const Row& r = row(n);
  return r.lo + static_cast<int>(r.v.size()) - 1;
}

Rational CountTable::row_sum(int n) const {
  Rational total;
  for (const Rational& c : row(n).v) {
    total += c;
  }
  return total;
}

CountTable build_counts(const JumpSet& jumps, int start, std::optional<int> floor, int n_max) {
  require_length(n_max);
  std::vector<CountTable::Row> rows;
  rows.push_back({start, {Rational(floor && start < *floor ? 0 : 1)}});
  for (int n = 0; n < n_max; ++n) {
    const CountTable::Row& cur = rows.back();
    const int hi = cur.lo + static_cast<int>(cur.v.size()) - 1;
    const auto [lo2, hi2] = next_window(cur.lo, hi, jumps, floor);
    CountTable::Row next{lo2, std::vector<Rational>(static_cast<std::size_t>(hi2 - lo2 + 1))};
    for (std::size_t i = 0; i < cur.v.size(); ++i) {
      if (sgn(cur.v[i]) == 0) {
        continue;
      }
      const int k = cur.lo + static_cast<int>(i);
      for (const Jump& j : jumps.jumps()) {
        const int target = k + j.delta;
        if (floor && target < *floor) {
          continue;
        }
        next.v[static_cast<std::size_t>(target - lo2)] += j.weight * cur.v[i];
      }
    }
    rows.push_back(std::move(next));
  }
  return CountTable(jumps, start, floor, std::move(rows));
}

AreaTable::AreaTable(JumpSet jumps, int start, std::optional<int> floor, std::vector<Row> rows)
    : jumps_(std::move(jumps)), start_(start), floor_(floor), rows_(std::move(rows)) {}

BigInt AreaTable::count(int n, int k) const {
  if (n < 0 || n > n_max()) {
    throw std::out_of_range("length outside the table");
  }
  const Row& r = rows_[static_cast<std::size_t>(n)];
  const long idx = static_cast<long>(k) - r.lo;
  return idx < 0 || idx >= static_cast<long>(r.count.size()) ? BigInt(0) : r.count[static_cast<std::size_t>(idx)];
}

BigInt AreaTable::twice_area(int n, int k) const {
  if (n < 0 || n > n_max()) {
    throw std::out_of_range("length outside the table");
  }
  const Row& r = rows_[static_cast<std::size_t>(n)];
  const long idx = static_cast<long>(k) - r.lo;
  return idx < 0 || idx >= static_cast<long>(r.twice_area.size()) ? BigInt(0)
                                                                    : r.twice_area[static_cast<std::size_t>(idx)];
}

namespace {

AreaTable::Row advance_area(const AreaTable::Row& cur, const JumpSet& jumps, std::optional<int> floor) {
  const int hi = cur.lo + static_cast<int>(cur.count.size()) - 1;
  const auto [lo2, hi2] = next_window(cur.lo, hi, jumps, floor);
  const auto width = static_cast<std::size_t>(hi2 - lo2 + 1);
  AreaTable::Row next{lo2, std::vector<BigInt>(width), std::vector<BigInt>(width)};
  for (std::size_t i = 0; i < cur.count.size(); ++i) {
    if (sgn(cur.count[i]) == 0) {
      continue;
    }
    const int k = cur.lo + static_cast<int>(i);
    for (const Jump& j : jumps.jumps()) {
      const int target = k + j.delta;
      if (floor && target < *floor) {
        continue;
      }
      const auto t = static_cast<std::size_t>(target - lo2);
      mpz_add(next.count[t].get_mpz_t(), next.count[t].get_mpz_t(), cur.count[i].get_mpz_t());
      mpz_add(next.twice_area[t].get_mpz_t(), next.twice_area[t].get_mpz_t(), cur.twice_area[i].get_mpz_t());
      const long height_sum = static_cast<long>(k) + target;
      if (height_sum >= 0) {
        mpz_addmul_ui(next.twice_area[t].get_mpz_t(), cur.count[i].get_mpz_t(),
                      static_cast<unsigned long>(height_sum));
      } else {
        mpz_submul_ui(next.twice_area[t].get_mpz_t(), cur.count[i].get_mpz_t(),
                      static_cast<unsigned long>(-height_sum));
      }
    }
  }
  return next;
}

}  // namespace

AreaTable build_area_table(const JumpSet& jumps, int start, std::optional<int> floor, int n_max) {
  require_unit_weights(jumps);
  require_length(n_max);
  std::vector<AreaTable::Row> rows;
  rows.push_back({start, {BigInt(floor && start < *floor ? 0 : 1)}, {BigInt(0)}});
  for (int n = 0; n < n_max; ++n) {
    rows.push_back(advance_area(rows.back(), jumps, floor));
  }
  return AreaTable(jumps, start, floor, std::move(rows));
}

std::vector<BigInt> endpoint_counts(const JumpSet& jumps, int start, std::optional<int> floor, int end,
                                    int n_max) {
  require_unit_weights(jumps);
  require_length(n_max);
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  int lo = start;
  std::vector<BigInt> cur{BigInt(floor && start < *floor ? 0 : 1)};
  std::vector<BigInt> next;
  auto record = [&] {
    const long idx = static_cast<long>(end) - lo;
    out.push_back(idx < 0 || idx >= static_cast<long>(cur.size()) ? BigInt(0) : cur[static_cast<std::size_t>(idx)]);
  };
  record();
  for (int n = 0; n < n_max; ++n) {
    const int hi = lo + static_cast<int>(cur.size()) - 1;
    auto [lo2, hi2] = next_window(lo, hi, jumps, floor);
    // Altitudes from which `end` is out of reach in the remaining steps.
    const int remaining = n_max - n - 1;
    const int reach_hi = end - jumps.min_delta() * remaining;
    const int reach_lo = end - jumps.max_delta() * remaining;
    hi2 = std::max(lo2, std::min(hi2, reach_hi));
    next.assign(static_cast<std::size_t>(hi2 - lo2 + 1), BigInt(0));
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (sgn(cur[i]) == 0) {
        continue;
      }
      const int k = lo + static_cast<int>(i);
      for (const Jump& j : jumps.jumps()) {
        const int target = k + j.delta;
        if ((floor && target < *floor) || target > hi2 || target < reach_lo) {
          continue;
        }
        BigInt& cell = next[static_cast<std::size_t>(target - lo2)];
        mpz_add(cell.get_mpz_t(), cell.get_mpz_t(), cur[i].get_mpz_t());
      }
    }
    cur.swap(next);
    lo = lo2;
    record();
  }
  return out;
}

std::vector<ExcursionArea> excursion_area_profile(const JumpSet& jumps, int n_max) {
  require_unit_weights(jumps);
  require_length(n_max);
  std::vector<ExcursionArea> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  AreaTable::Row cur{0, {BigInt(1)}, {BigInt(0)}};
  out.push_back({BigInt(1), BigInt(0)});
  for (int n = 0; n < n_max; ++n) {
    cur = advance_area(cur, jumps, 0);
    // The floor keeps lo at 0, so altitude 0 sits at index 0.
    out.push_back({cur.count.front(), cur.twice_area.front()});
  }
  return out;
}

KnuthCounts knuth_AB(int n) {
  if (n < 1) {
    throw std::invalid_argument("knuth_AB requires n >= 1");
  }
  const int length = 7 * n - 2;
  const JumpSet jumps = knuth_jumps();
  return {endpoint_counts(jumps, 4, 0, 1, length).back(), endpoint_counts(jumps, 3, 0, 0, length).back()};
}

std::vector<KnuthCounts> knuth_AB_sequence(int n_max) {
  if (n_max < 1) {
    throw std::invalid_argument("knuth_AB_sequence requires n_max >= 1");
  }
  const int length = 7 * n_max - 2;
  const JumpSet jumps = knuth_jumps();
  const std::vector<BigInt> g1 = endpoint_counts(jumps, 4, 0, 1, length);
  const std::vector<BigInt> f0 = endpoint_counts(jumps, 3, 0, 0, length);
  std::vector<KnuthCounts> out;
  for (int n = 1; n <= n_max; ++n) {
    const auto idx = static_cast<std::size_t>(7 * n - 2);
    out.push_back({g1[idx], f0[idx]});
  }
  return out;
}

BigInt count_ne_below_line(int a, int c, int k, LatticePoint endpoint, bool touching) {
  if (endpoint.x < 0 || endpoint.y < 0) {
    return BigInt(0);
  }
  const auto allowed = [&](long x, long y) {
    const long lhs = static_cast<long>(c) * y;
    const long rhs = static_cast<long>(a) * x + k;
    return touching ? lhs <= rhs : lhs < rhs;
  };
  const auto width = static_cast<std::size_t>(endpoint.y) + 1;
  std::vector<BigInt> column(width);
  for (int x = 0; x <= endpoint.x; ++x) {
    for (int y = 0; y <= endpoint.y; ++y) {
      BigInt& cell = column[static_cast<std::size_t>(y)];
      if (!allowed(x, y)) {
        cell = 0;
        continue;
      }
      if (x == 0 && y == 0) {
        cell = 1;
        continue;
      }
      // cell already holds the value from column x - 1 (East step).
      if (x == 0) {
        cell = 0;
      }
      if (y > 0) {
        cell += column[static_cast<std::size_t>(y) - 1];
      }
    }
  }
  return column.back();
}

BigInt duchon_excursions(int n) {
  require_length(n);
  return endpoint_counts(duchon_jumps(), 0, 0, 0, n).back();
}

Rational duchon_mean_area(int n) {
  if (n <= 0) {
    throw std::domain_error("mean area needs a positive length");
  }
  const ExcursionArea last = excursion_area_profile(duchon_jumps(), n).back();
  if (last.count == 0) {
    throw std::domain_error("no Duchon excursion of length " + std::to_string(n));
  }
  return make_rational(last.twice_area, last.count * 2);
}

}  // namespace slope_kernel
