#include "oracles.hpp"

#include "slope_kernel/bijection.hpp"
#include "slope_kernel/enumerate.hpp"

#include <gtest/gtest.h>

namespace sk = slope_kernel;

TEST(SlopeBarrier, Validation) {
  EXPECT_NO_THROW(sk::SlopeBarrier(2, 5, 2));
  EXPECT_NO_THROW(sk::SlopeBarrier(2, 4, 1));  // a/c reducible, gcd(a, b, c) = 1
  EXPECT_THROW(sk::SlopeBarrier(2, 4, 2), std::invalid_argument);
  EXPECT_THROW(sk::SlopeBarrier(0, 5, 1), std::invalid_argument);
  EXPECT_THROW(sk::SlopeBarrier(2, 5, 0), std::invalid_argument);
}

TEST(Bijection, AffineImage) {
  const sk::SlopeBarrier bar(2, 5, 2);
  EXPECT_EQ(sk::affine_image({0, 0}, bar), (sk::LatticePoint{0, 2}));
  EXPECT_EQ(sk::affine_image({1, 0}, bar), (sk::LatticePoint{1, 4}));
  EXPECT_EQ(sk::affine_image({0, 1}, bar), (sk::LatticePoint{1, -3}));
}

TEST(Bijection, PathMaps) {
  const sk::SlopeBarrier bar(2, 5, 2);
  const sk::NEPath p = sk::NEPath::parse("EEN");
  const sk::DirectedPath d = sk::ne_to_directed(p, bar);
  EXPECT_EQ(d.start_altitude, 2);
  EXPECT_EQ(d.jumps, (std::vector<int>{2, 2, -5}));
  EXPECT_EQ(d.altitudes(), (std::vector<int>{2, 4, 6, 1}));
  EXPECT_EQ(sk::directed_to_ne(d, bar), p);
  EXPECT_EQ(p.to_string(), "EEN");
  EXPECT_THROW(sk::NEPath::parse("ENX"), std::invalid_argument);
  EXPECT_THROW(sk::directed_to_ne(sk::DirectedPath{2, {2, 3}}, bar), std::invalid_argument);
  EXPECT_THROW(sk::directed_to_ne(sk::DirectedPath{1, {2}}, bar), std::invalid_argument);
}

TEST(Bijection, AltitudeEqualsAffineCoordinate) {
  // Along any path, altitude = a x - c y + b at the visited point.
  const sk::SlopeBarrier bar(2, 3, 2);
  const sk::NEPath p = sk::NEPath::parse("ENNEENEN");
  const auto pts = sk::ne_points(p);
  const auto alt = sk::ne_to_directed(p, bar).altitudes();
  ASSERT_EQ(pts.size(), alt.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_EQ(sk::affine_image(pts[i], bar).y, alt[i]);
    EXPECT_EQ(sk::affine_image(pts[i], bar).x, static_cast<int>(i));
  }
}

TEST(Bijection, ExhaustiveStrictAndTouching) {
  for (const auto& bar : {sk::SlopeBarrier(2, 5, 2), sk::SlopeBarrier(2, 3, 2), sk::SlopeBarrier(1, 2, 1)}) {
    for (bool touching : {false, true}) {
      const sk::BijectionReport r = sk::verify_bijection(bar, 14, touching);
      EXPECT_TRUE(r.passed) << bar.a << "/" << bar.c << " touching=" << touching;
      ASSERT_EQ(r.lengths.size(), 15u);
      for (const auto& l : r.lengths) {
        EXPECT_EQ(l.ne_count, l.directed_count);
        EXPECT_TRUE(l.pathwise_ok);
      }
    }
  }
  EXPECT_THROW(sk::verify_bijection(sk::SlopeBarrier(2, 5, 2), 27), std::invalid_argument);
}

TEST(Bijection, CountsAgainstIndependentOracle) {
  // NE paths of length n strictly below c y = a x + b, any endpoint.
  const sk::SlopeBarrier bar(2, 5, 2);
  const sk::BijectionReport r = sk::verify_bijection(bar, 12);
  for (const auto& l : r.lengths) {
    mpz_class total = 0;
    for (int north = 0; north <= l.length; ++north) {
      total += oracle::count_ne_paths(2, 5, 2, l.length - north, north, false);
    }
    EXPECT_EQ(l.ne_count, total) << l.length;
  }
}

TEST(Bijection, TimeReversal) {
  // Walks from b to 0 with {+a, -c} equal walks from 0 to b with {-a, +c}.
  for (auto [a, c, b] : {std::tuple{2, 5, 2}, std::tuple{2, 3, 1}, std::tuple{1, 2, 3}}) {
    const auto fwd = sk::endpoint_counts(sk::JumpSet::unit({a, -c}), b, 0, 0, 16);
    const auto bwd = sk::endpoint_counts(sk::JumpSet::unit({-a, c}), 0, 0, b, 16);
    EXPECT_EQ(fwd, bwd) << a << c << b;
  }
}
