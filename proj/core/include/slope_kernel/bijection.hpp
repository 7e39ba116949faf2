#pragma once

#include "slope_kernel/arith.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace slope_kernel {

// The barrier y = (a/c) x + (b/c) with gcd(a, b, c) = 1.
struct SlopeBarrier {
  int a = 0;
  int c = 0;
  int b = 0;

  SlopeBarrier(int a, int c, int b);
};

enum class Step : char { East = 'E', North = 'N' };

// North/East lattice path from the origin.
struct NEPath {
  std::vector<Step> steps;

  static NEPath parse(std::string_view text);  // "EEN"
  std::string to_string() const;

  friend bool operator==(const NEPath&, const NEPath&) = default;
};

// Walk with integer jumps from a start altitude.
struct DirectedPath {
  int start_altitude = 0;
  std::vector<int> jumps;

  // start_altitude followed by the prefix sums.
  std::vector<int> altitudes() const;

  friend bool operator==(const DirectedPath&, const DirectedPath&) = default;
};

struct LatticePoint {
  int x = 0;
  int y = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// (x, y) -> (x + y, a x - c y + b).
LatticePoint affine_image(const LatticePoint& p, const SlopeBarrier& barrier);

// Points visited by the path, origin included.
std::vector<LatticePoint> ne_points(const NEPath& path);

// East -> +a, North -> -c, starting at altitude b.
DirectedPath ne_to_directed(const NEPath& path, const SlopeBarrier& barrier);

// Inverse map. Throws std::invalid_argument when a jump is not +a or -c or
// the start altitude differs from b.
NEPath directed_to_ne(const DirectedPath& path, const SlopeBarrier& barrier);

struct BijectionLengthCheck {
  int length = 0;
  BigInt ne_count;        // NE paths staying strictly below the barrier
  BigInt directed_count;  // walks from b with altitudes >= floor
  bool pathwise_ok = true;
};

struct BijectionReport {
  SlopeBarrier barrier;
  bool touching = false;
  std::vector<BijectionLengthCheck> lengths;
  bool passed = true;
};

// Exhaustive 2^n check for every n <= n_max. Strict mode compares NE paths
// with c y < a x + b everywhere against walks with altitude >= 1;
// touching mode uses <= and altitude >= 0.
BijectionReport verify_bijection(const SlopeBarrier& barrier, int n_max, bool touching = false);

}  // namespace slope_kernel
