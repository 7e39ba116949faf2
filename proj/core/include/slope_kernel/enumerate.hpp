#pragma once

#include "slope_kernel/arith.hpp"
#include "slope_kernel/bijection.hpp"
#include "slope_kernel/jump_set.hpp"

#include <optional>
#include <vector>

namespace slope_kernel {

// Exact counts f_{n,k} of walks of length n ending at altitude k, built by
// the step recurrence f_{n+1}(u) = {u^{>=floor}} [P(u) f_n(u)]. Without a
// floor the table holds unconstrained walks (and bridges).
//
// Entries are exact rationals so that weighted jump sets are supported;
// with unit weights every entry is an integer.
class CountTable {
 public:
  struct Row {
    int lo = 0;  // altitude of v[0]
    std::vector<Rational> v;
  };

  CountTable(JumpSet jumps, int start, std::optional<int> floor, std::vector<Row> rows);

  const JumpSet& jumps() const { return jumps_; }
  int start() const { return start_; }
  std::optional<int> floor() const { return floor_; }
  int n_max() const { return static_cast<int>(rows_.size()) - 1; }

  // Zero outside the stored altitude range.
  Rational count(int n, int k) const;
  int min_altitude(int n) const;
  int max_altitude(int n) const;
  Rational row_sum(int n) const;

 private:
  const Row& row(int n) const;

  JumpSet jumps_;
  int start_;
  std::optional<int> floor_;
  std::vector<Row> rows_;
};

// Altitudes are capped at start + n * max_delta (and at start + n * min_delta
// from below when unconstrained).
CountTable build_counts(const JumpSet& jumps, int start, std::optional<int> floor, int n_max);

// Counts together with twice the trapezoidal area below the paths: every
// unit step from altitude h to h' adds h + h'. Unit weights only.
class AreaTable {
 public:
  struct Row {
    int lo = 0;
    std::vector<BigInt> count;
    std::vector<BigInt> twice_area;
  };

  AreaTable(JumpSet jumps, int start, std::optional<int> floor, std::vector<Row> rows);

  const JumpSet& jumps() const { return jumps_; }
  int n_max() const { return static_cast<int>(rows_.size()) - 1; }
  BigInt count(int n, int k) const;
  BigInt twice_area(int n, int k) const;

 private:
  JumpSet jumps_;
  int start_;
  std::optional<int> floor_;
  std::vector<Row> rows_;
};

AreaTable build_area_table(const JumpSet& jumps, int start, std::optional<int> floor, int n_max);

// Streaming form of build_counts for one end altitude: result[n] = f_{n,end}
// for n = 0..n_max. Keeps two rows in memory. Unit weights only.
std::vector<BigInt> endpoint_counts(const JumpSet& jumps, int start, std::optional<int> floor,
                                    int end, int n_max);

struct ExcursionArea {
  BigInt count;
  BigInt twice_area;
};

// Excursions (start 0, floor 0, end 0) with their summed twice-areas, for
// every length 0..n_max. Unit weights only.
std::vector<ExcursionArea> excursion_area_profile(const JumpSet& jumps, int n_max);

struct KnuthCounts {
  BigInt a;  // walks with jumps -2/+5 from 4 to 1 in 7n-2 steps (G_1)
  BigInt b;  // walks from 3 to 0 (F_0)

  BigInt sum() const { return a + b; }
};

// Throws std::invalid_argument for n < 1.
KnuthCounts knuth_AB(int n);
// result[i] holds n = i + 1.
std::vector<KnuthCounts> knuth_AB_sequence(int n_max);

// North/East paths from the origin to `endpoint` whose every point satisfies
// c y < a x + k (or <= when touching).
BigInt count_ne_below_line(int a, int c, int k, LatticePoint endpoint, bool touching = false);

// Excursions with jumps +2/-3 of length n.
BigInt duchon_excursions(int n);

// Mean of the trapezoidal areas over Duchon excursions of length n. Throws
// std::domain_error when there is no excursion of that length.
Rational duchon_mean_area(int n);

}  // namespace slope_kernel
