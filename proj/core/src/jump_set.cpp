#include "slope_kernel/jump_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace slope_kernel {

JumpSet::JumpSet(std::vector<Jump> jumps) : jumps_(std::move(jumps)) {
  if (jumps_.empty()) {
    throw std::invalid_argument("jump set is empty");
  }
  std::sort(jumps_.begin(), jumps_.end(),
            [](const Jump& a, const Jump& b) { return a.delta < b.delta; });
  for (std::size_t i = 0; i < jumps_.size(); ++i) {
    if (jumps_[i].weight <= 0) {
      throw std::invalid_argument("jump weights must be strictly positive");
    }
    if (i > 0 && jumps_[i].delta == jumps_[i - 1].delta) {
      throw std::invalid_argument("duplicate jump delta " + std::to_string(jumps_[i].delta));
    }
  }
  if (jumps_.front().delta >= 0 || jumps_.back().delta <= 0) {
    throw std::invalid_argument("jump set needs a negative and a positive delta");
  }
}

JumpSet JumpSet::unit(std::initializer_list<int> deltas) {
  std::vector<Jump> jumps;
  for (int d : deltas) {
    jumps.push_back({d, Rational(1)});
  }
  return JumpSet(std::move(jumps));
}

JumpSet JumpSet::parse(std::string_view text) {
  std::vector<Jump> jumps;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) {
      comma = text.size();
    }
    std::string item(text.substr(pos, comma - pos));
    item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return c == ' '; }), item.end());
    if (item.empty()) {
      throw std::invalid_argument("malformed jump set: '" + std::string(text) + "'");
    }
    Jump jump;
    std::string delta_text = item;
    if (auto colon = item.find(':'); colon != std::string::npos) {
      delta_text = item.substr(0, colon);
      jump.weight = parse_rational(item.substr(colon + 1));
    }
    try {
      std::size_t used = 0;
      jump.delta = std::stoi(delta_text, &used);
      if (used != delta_text.size()) {
        throw std::invalid_argument(delta_text);
      }
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed jump delta '" + delta_text + "'");
    }
    jumps.push_back(std::move(jump));
    pos = comma + 1;
  }
  return JumpSet(std::move(jumps));
}

int JumpSet::period() const {
  int g = 0;
  for (const Jump& j : jumps_) {
    g = std::gcd(g, j.delta - min_delta());
  }
  return g;
}

bool JumpSet::unit_weights() const {
  return std::all_of(jumps_.begin(), jumps_.end(), [](const Jump& j) { return j.weight == 1; });
}

Rational JumpSet::weight_of(int delta) const {
  for (const Jump& j : jumps_) {
    if (j.delta == delta) {
      return j.weight;
    }
  }
  return Rational(0);
}

std::string JumpSet::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < jumps_.size(); ++i) {
    if (i > 0) {
      out << ',';
    }
    out << (jumps_[i].delta > 0 ? "+" : "") << jumps_[i].delta << ':' << jumps_[i].weight.get_str();
  }
  return out.str();
}

JumpSet knuth_jumps() { return JumpSet::unit({-2, 5}); }

JumpSet duchon_jumps() { return JumpSet::unit({2, -3}); }

}  // namespace slope_kernel
