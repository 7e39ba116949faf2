#include "slope_kernel/bijection.hpp"

#include <numeric>
#include <stdexcept>

namespace slope_kernel {

SlopeBarrier::SlopeBarrier(int a_, int c_, int b_) : a(a_), c(c_), b(b_) {
  if (a <= 0 || b <= 0 || c <= 0) {
    throw std::invalid_argument("barrier parameters a, c, b must be positive");
  }
  if (std::gcd(std::gcd(a, b), c) != 1) {
    throw std::invalid_argument("barrier requires gcd(a, b, c) = 1");
  }
}

NEPath NEPath::parse(std::string_view text) {
  NEPath path;
  for (char ch : text) {
    switch (ch) {
      case 'E':
      case 'e':
        path.steps.push_back(Step::East);
        break;
      case 'N':
      case 'n':
        path.steps.push_back(Step::North);
        break;
      default:
        throw std::invalid_argument(std::string("invalid NE step '") + ch + "'");
    }
  }
  return path;
}

std::string NEPath::to_string() const {
  std::string s;
  for (Step step : steps) {
    s.push_back(static_cast<char>(step));
  }
  return s;
}

std::vector<int> DirectedPath::altitudes() const {
  std::vector<int> h{start_altitude};
  for (int d : jumps) {
    h.push_back(h.back() + d);
  }
  return h;
}

LatticePoint affine_image(const LatticePoint& p, const SlopeBarrier& barrier) {
  return {p.x + p.y, barrier.a * p.x - barrier.c * p.y + barrier.b};
}

std::vector<LatticePoint> ne_points(const NEPath& path) {
  std::vector<LatticePoint> pts{{0, 0}};
  for (Step step : path.steps) {
    LatticePoint next = pts.back();
    (step == Step::East ? next.x : next.y) += 1;
    pts.push_back(next);
  }
  return pts;
}

DirectedPath ne_to_directed(const NEPath& path, const SlopeBarrier& barrier) {
  DirectedPath out{barrier.b, {}};
  out.jumps.reserve(path.steps.size());
  for (Step step : path.steps) {
    out.jumps.push_back(step == Step::East ? barrier.a : -barrier.c);
  }
  return out;
}

NEPath directed_to_ne(const DirectedPath& path, const SlopeBarrier& barrier) {
  if (path.start_altitude != barrier.b) {
    throw std::invalid_argument("directed path must start at altitude b = " + std::to_string(barrier.b));
  }
  NEPath out;
  out.steps.reserve(path.jumps.size());
  for (int d : path.jumps) {
    if (d == barrier.a) {
      out.steps.push_back(Step::East);
    } else if (d == -barrier.c) {
      out.steps.push_back(Step::North);
    } else {
      throw std::invalid_argument("jump " + std::to_string(d) + " is neither +a nor -c");
    }
  }
  return out;
}

BijectionReport verify_bijection(const SlopeBarrier& barrier, int n_max, bool touching) {
  if (n_max < 0 || n_max > 26) {
    throw std::invalid_argument("exhaustive bijection check supports 0 <= n_max <= 26");
  }
  const int floor = touching ? 0 : 1;
  const auto below = [&](const LatticePoint& p) {
    const long lhs = static_cast<long>(barrier.c) * p.y;
    const long rhs = static_cast<long>(barrier.a) * p.x + barrier.b;
    return touching ? lhs <= rhs : lhs < rhs;
  };

  BijectionReport report{barrier, touching, {}, true};
  for (int n = 0; n <= n_max; ++n) {
    BijectionLengthCheck check;
    check.length = n;
    long ne_count = 0;
    long directed_count = 0;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
      // NE side: bit i set means step i is North.
      NEPath path;
      path.steps.reserve(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        path.steps.push_back((mask >> i) & 1UL ? Step::North : Step::East);
      }
      const std::vector<LatticePoint> pts = ne_points(path);
      bool ne_ok = true;
      for (const LatticePoint& p : pts) {
        ne_ok = ne_ok && below(p);
      }

      // Directed side, enumerated independently: bit i set means jump -c.
      int h = barrier.b;
      bool dir_ok = h >= floor;
      for (int i = 0; i < n; ++i) {
        h += (mask >> i) & 1UL ? -barrier.c : barrier.a;
        dir_ok = dir_ok && h >= floor;
      }
      ne_count += ne_ok ? 1 : 0;
      directed_count += dir_ok ? 1 : 0;

      const DirectedPath image = ne_to_directed(path, barrier);
      const std::vector<int> alt = image.altitudes();
      bool image_ok = directed_to_ne(image, barrier) == path;
      bool image_valid = true;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const LatticePoint q = affine_image(pts[i], barrier);
        image_ok = image_ok && q.x == static_cast<int>(i) && q.y == alt[i];
        image_valid = image_valid && alt[i] >= floor;
      }
      image_ok = image_ok && image_valid == ne_ok;
      check.pathwise_ok = check.pathwise_ok && image_ok;
    }
    check.ne_count = ne_count;
    check.directed_count = directed_count;
    report.passed = report.passed && check.pathwise_ok && check.ne_count == check.directed_count;
    report.lengths.push_back(std::move(check));
  }
  return report;
}

}  // namespace slope_kernel
