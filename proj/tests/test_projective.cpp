#include <gtest/gtest.h>

#include "projconv/projective.hpp"
#include "projconv/random.hpp"

using namespace projconv;

TEST(ProjPoint, CanonicalForm) {
  EXPECT_EQ(ProjPoint({-2, 4, 0}), ProjPoint({1, -2, 0}));
  EXPECT_EQ(ProjPoint({-2, 4, 0}).coords(), (IntVec{1, -2, 0}));
  EXPECT_THROW(ProjPoint({0, 0, 0}), Error);
  EXPECT_THROW(ProjPoint({1}), Error);
  EXPECT_THROW(ProjPoint({1, 2, 3, 4, 5}), Error);
  EXPECT_EQ(to_string(ProjPoint({0, -3, 6})), "[0, 1, -2]");
  EXPECT_EQ(parse_coords("[1, -2, 3/1]"), (IntVec{1, -2, 3}));
  EXPECT_THROW(parse_coords("1, 2"), Error);
  EXPECT_THROW(parse_coords("[1/2, 1]"), Error);
}

TEST(Incidence, Examples) {
  EXPECT_TRUE(incident({1, 0, 0}, ProjHyperplane{0, 0, 1}));
  EXPECT_TRUE(incident({1, 1, 1}, ProjHyperplane{1, -1, 0}));
  EXPECT_FALSE(incident({1, 2, 3}, ProjHyperplane{1, 0, 0}));
  EXPECT_THROW(incident({1, 0}, ProjHyperplane{1, 0, 0}), Error);
}

TEST(Incidence, ReversedUnderTransposition) {
  Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    const ProjPoint p = rng.point(3, 3);
    const ProjHyperplane h(rng.nonzero_vector(3, 3));
    EXPECT_EQ(incident(p, h), incident(h.as_point(), as_hyperplane(p)));
  }
}

TEST(Segments, Examples) {
  auto [s, t] = segments({1, 0, 0}, {0, 1, 0});
  EXPECT_EQ(s.sign, SegmentSign::NonNegative);
  EXPECT_EQ(t.sign, SegmentSign::NonPositive);
  EXPECT_TRUE(segment_contains(s, {1, 1, 0}));
  EXPECT_TRUE(segment_contains(t, {1, -1, 0}));
  EXPECT_TRUE(segment_contains(s, {2, 3, 0}));
  EXPECT_FALSE(segment_contains(s, {1, -1, 0}));
  EXPECT_FALSE(segment_contains(s, {0, 0, 1}));
  for (const auto& seg : {s, t}) {
    EXPECT_TRUE(segment_contains(seg, {1, 0, 0}));
    EXPECT_TRUE(segment_contains(seg, {0, 1, 0}));
  }
  EXPECT_THROW(segments({1, 2, 3}, {-1, -2, -3}), Error);
}

TEST(Segments, ProjectiveLineIsCoveredByTwoArcs) {
  auto [s, t] = segments({1, 0}, {0, 1});
  for (long a = -5; a <= 5; ++a)
    for (long b = -5; b <= 5; ++b) {
      if (a == 0 && b == 0) continue;
      const ProjPoint r{a, b};
      const bool in_s = segment_contains(s, r), in_t = segment_contains(t, r);
      EXPECT_TRUE(in_s || in_t);
      EXPECT_EQ(in_s && in_t, (r == ProjPoint{1, 0} || r == ProjPoint{0, 1}));
    }
}

TEST(Segments, UnionIsTheLineIntersectionTheEndpoints) {
  Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    const ProjPoint p = rng.point(3, 4);
    ProjPoint q = rng.point(3, 4);
    while (q == p) q = rng.point(3, 4);
    auto [s, t] = segments(p, q);
    for (int j = 0; j < 20; ++j) {
      const long long l = rng.uniform(-6, 6), m = rng.uniform(-6, 6);
      if (l == 0 && m == 0) continue;
      IntVec r(3);
      for (std::size_t k = 0; k < 3; ++k) r[k] = l * p.coords()[k] + m * q.coords()[k];
      const ProjPoint rp(r);
      const bool in_s = segment_contains(s, rp), in_t = segment_contains(t, rp);
      EXPECT_TRUE(in_s || in_t);
      EXPECT_EQ(in_s && in_t, rp == p || rp == q);
    }
    // Off-line points are in neither.
    const ProjPoint off = rng.point(3, 4);
    IntVec m{p.coords()[1] * q.coords()[2] - p.coords()[2] * q.coords()[1],
             p.coords()[2] * q.coords()[0] - p.coords()[0] * q.coords()[2],
             p.coords()[0] * q.coords()[1] - p.coords()[1] * q.coords()[0]};
    if (dot(m, off.coords()) != 0) {
      EXPECT_FALSE(segment_contains(s, off));
      EXPECT_FALSE(segment_contains(t, off));
    }
  }
}

TEST(Segments, SetLevelEquality) {
  const Segment a{IntVec{1, 0, 0}, IntVec{0, 1, 0}, SegmentSign::NonNegative};
  const Segment b{IntVec{0, -2, 0}, IntVec{-1, 0, 0}, SegmentSign::NonNegative};
  const Segment c{IntVec{0, 1, 0}, IntVec{-1, 0, 0}, SegmentSign::NonNegative};
  EXPECT_TRUE(same_segment(a, b));
  EXPECT_FALSE(same_segment(a, c));
  EXPECT_EQ(a.midpoint(), ProjPoint({1, 1, 0}));
}

TEST(Delta, Examples) {
  EXPECT_EQ(delta({1, 0, 0}).excluded, ProjHyperplane({1, 0, 0}));
  EXPECT_EQ(delta_inv(IrreducibleConvex{ProjHyperplane{2, -4, 6}}), ProjPoint({1, -2, 3}));
}

TEST(Delta, InverseBijectionAndIncidenceReversal) {
  Rng rng(23);
  for (int i = 0; i < 1000; ++i) {
    const ProjPoint p = rng.point(static_cast<std::size_t>(rng.uniform(2, 4)), 5);
    EXPECT_EQ(delta_inv(delta(p)), p);
    const IrreducibleConvex c{ProjHyperplane(rng.nonzero_vector(p.ambient_dim(), 5))};
    EXPECT_EQ(delta(delta_inv(c)), c);
    EXPECT_EQ(contains(c, p), contains(delta(p), delta_inv(c)));
  }
}
