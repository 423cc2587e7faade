#include <gtest/gtest.h>

#include "projconv/cone.hpp"
#include "projconv/oracle.hpp"
#include "projconv/random.hpp"

using namespace projconv;

namespace {

using Rows = std::vector<IntVec>;

const Rows kOrthant{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};

}  // namespace

TEST(DoubleDescription, OrthantIsSelfDual) {
  auto c = PolyhedralCone::from_generators({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
  EXPECT_EQ(c.facets(), kOrthant);
  EXPECT_EQ(c.rays(), kOrthant);
  EXPECT_EQ(dual_cone(c), c);
  EXPECT_TRUE(c.is_salient());
  EXPECT_TRUE(c.is_fulldim());
  EXPECT_EQ(intersect(c, dual_cone(c)), c);
  EXPECT_EQ(*interior_point(c), (IntVec{1, 1, 1}));
}

TEST(DoubleDescription, PlanarWedge) {
  auto c = PolyhedralCone::from_generators({{1, 0}, {1, 1}}, 2);
  EXPECT_EQ(c.facets(), (Rows{{0, 1}, {1, -1}}));
  EXPECT_EQ(dual_cone(c).rays(), (Rows{{0, 1}, {1, -1}}));
  EXPECT_EQ(*interior_point(c), (IntVec{2, 1}));
}

TEST(DoubleDescription, EmptyInputs) {
  auto whole = PolyhedralCone::from_facets({}, 3);
  EXPECT_EQ(whole.lineality().size(), 3u);
  EXPECT_TRUE(whole.is_whole());
  auto zero = PolyhedralCone::from_generators({}, 3);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.equations().size(), 3u);
  EXPECT_EQ(dual_cone(zero), whole);
  EXPECT_THROW(PolyhedralCone::from_facets({}, 5), Error);
}

TEST(DoubleDescription, HalfSpaceAndRay) {
  auto half = PolyhedralCone::from_facets({{1, 0, 0}}, 3);
  auto d = dual_cone(half);
  EXPECT_EQ(d.rays(), (Rows{{1, 0, 0}}));
  EXPECT_TRUE(d.lineality().empty());
  auto plane_half = PolyhedralCone::from_generators({{1, 0}, {0, 1}, {-1, 0}}, 2);
  EXPECT_FALSE(plane_half.is_salient());
  auto ray = PolyhedralCone::from_generators({{1, 0, 0}}, 3);
  EXPECT_TRUE(ray.is_salient());
  EXPECT_FALSE(ray.is_fulldim());
  EXPECT_FALSE(interior_point(PolyhedralCone::from_generators({{1, 0}}, 2)));
}

TEST(DoubleDescription, IntersectAndHull) {
  auto pos = PolyhedralCone::from_generators({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
  EXPECT_TRUE(intersect(pos, pos.negated()).is_zero());
  auto e1 = PolyhedralCone::from_generators({{1, 0, 0}}, 3);
  auto e2 = PolyhedralCone::from_generators({{0, 1, 0}}, 3);
  auto quarter = conic_hull(e1, e2);
  EXPECT_EQ(quarter.rays(), (Rows{{0, 1, 0}, {1, 0, 0}}));
  EXPECT_EQ(quarter.equations(), (Rows{{0, 0, 1}}));
  EXPECT_THROW(intersect(pos, PolyhedralCone::whole(2)), Error);
}

// Facet lists below were produced by the brute-force cofactor enumeration
// and frozen.
TEST(DoubleDescription, FrozenBruteForceFacets) {
  auto c = PolyhedralCone::from_generators({{4, 16, 1}, {4, 16, -1}, {4, -16, 1}, {4, -16, -1}}, 3);
  EXPECT_EQ(c.facets(), (Rows{{1, 0, -4}, {1, 0, 4}, {4, -1, 0}, {4, 1, 0}}));
  auto d = PolyhedralCone::from_generators({{4, 1, 1}, {4, 1, -1}, {-4, 1, 1}, {-4, 1, -1}}, 3);
  EXPECT_EQ(d.facets(), (Rows{{-1, 4, 0}, {0, 1, -1}, {0, 1, 1}, {1, 4, 0}}));
  auto sq = PolyhedralCone::from_generators({{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1}}, 3);
  EXPECT_EQ(sq.facets(), (Rows{{0, 0, 1}, {0, 1, 0}, {1, -1, 0}, {1, 0, -1}}));
  auto four = PolyhedralCone::from_generators({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 1}, {2, -1, 0, 1}}, 4);
  auto four_hs = brute_force_halfspaces(four.generators(), 4);
  EXPECT_EQ(PolyhedralCone::from_facets(four_hs.inequalities, 4, four_hs.equations), four);
  EXPECT_EQ(four.facets().size(), 6u);
  auto slab = PolyhedralCone::from_generators({{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}}, 3);
  EXPECT_EQ(slab.facets(), (Rows{{0, 1, 0}}));
  EXPECT_EQ(slab.equations(), (Rows{{0, 0, 1}}));
  EXPECT_EQ(slab.lineality(), (Rows{{1, 0, 0}}));
}

TEST(DoubleDescription, ConsistentAndMatchesBruteForce) {
  Rng rng(31);
  for (int i = 0; i < 400; ++i) {
    Rows gens;
    const auto n = rng.uniform(1, 6);
    for (long long j = 0; j < n; ++j) gens.push_back(rng.nonzero_vector(3, 3));
    auto c = PolyhedralCone::from_generators(gens, 3);
    for (const auto& g : c.generators())
      for (const auto& f : c.inequalities()) ASSERT_GE(dot(f, g), 0);
    for (const auto& g : gens) ASSERT_TRUE(c.contains(g));
    // The brute-force half-spaces cut out the same cone.
    auto hs = brute_force_halfspaces(gens, 3);
    ASSERT_EQ(PolyhedralCone::from_facets(hs.inequalities, 3, hs.equations), c);
    EXPECT_EQ(PolyhedralCone::from_facets(c.facets(), 3, c.equations()), c);
  }
}

TEST(DualCone, BidualityOnSalientCones) {
  Rng rng(32);
  for (int i = 0; i < 500; ++i) {
    auto p = random_closed(rng, 3, 6, 6);
    EXPECT_EQ(dual_cone(dual_cone(p.cone())), p.cone());
  }
}

TEST(DualCone, OrderReversal) {
  Rng rng(33);
  for (int i = 0; i < 300; ++i) {
    Rows gens;
    const auto n = rng.uniform(1, 4);
    for (long long j = 0; j < n; ++j) gens.push_back(rng.nonzero_vector(3, 4));
    auto a = PolyhedralCone::from_generators(gens, 3);
    gens.push_back(rng.nonzero_vector(3, 4));
    auto b = PolyhedralCone::from_generators(gens, 3);
    ASSERT_TRUE(b.contains(a));
    EXPECT_TRUE(dual_cone(a).contains(dual_cone(b)));
  }
}

TEST(InteriorPoint, StrictlyInsideEveryFacet) {
  Rng rng(34);
  for (int i = 0; i < 200; ++i) {
    auto c = PolyhedralCone::from_facets({rng.nonzero_vector(3, 5), rng.nonzero_vector(3, 5)}, 3);
    auto x = interior_point(c);
    ASSERT_EQ(x.has_value(), c.is_fulldim());
    if (x) {
      EXPECT_TRUE(c.contains_interior(*x));
    }
  }
}
