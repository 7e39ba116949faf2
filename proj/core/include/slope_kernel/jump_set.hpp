#pragma once

#include "slope_kernel/arith.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace slope_kernel {

struct Jump {
  int delta = 0;
  Rational weight{1};

  friend bool operator==(const Jump&, const Jump&) = default;
};

// A finite set of signed altitude changes with positive weights, i.e. the
// jump polynomial P(u) = sum_j weight_j * u^delta_j.
//
// Jumps are kept sorted by delta. Construction enforces distinct deltas,
// strictly positive weights and at least one negative and one positive
// delta.
class JumpSet {
 public:
  explicit JumpSet(std::vector<Jump> jumps);

  // Unit weights.
  static JumpSet unit(std::initializer_list<int> deltas);

  // Parses "+5:1,-2:1". The ":weight" part is optional and may be a
  // fraction ("+1:1/2").
  static JumpSet parse(std::string_view text);

  std::span<const Jump> jumps() const { return jumps_; }
  std::size_t size() const { return jumps_.size(); }

  int min_delta() const { return jumps_.front().delta; }
  int max_delta() const { return jumps_.back().delta; }

  // gcd of the deltas shifted by the smallest one.
  int period() const;

  bool unit_weights() const;

  // Weight attached to `delta`, zero when absent.
  Rational weight_of(int delta) const;

  std::string to_string() const;

  friend bool operator==(const JumpSet&, const JumpSet&) = default;

 private:
  std::vector<Jump> jumps_;
};

// P(u) = u^-2 + u^5: time-reversed walks under slope 2/5.
JumpSet knuth_jumps();

// Jumps +2 / -3 of Duchon's club.
JumpSet duchon_jumps();

}  // namespace slope_kernel
