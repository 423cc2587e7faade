#include <functional>

#include <gtest/gtest.h>

#include "projconv/convexset.hpp"
#include "projconv/oracle.hpp"
#include "projconv/random.hpp"

using namespace projconv;

namespace {

ProjConvexPolytope triangle(Topology t) {
  return ProjConvexPolytope::from_generators({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, t);
}

ProjConvexPolytope affine_triangle(long x, long y) {
  return ProjConvexPolytope::from_generators({{1, x, y}, {1, x + 1, y}, {1, x, y + 1}}, Topology::Closed);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Parse;
}

}  // namespace

TEST(Polytope, InvariantsAreEnforced) {
  EXPECT_EQ(kind_of([] { ProjConvexPolytope(PolyhedralCone::zero(3), Topology::Closed); }),
            ErrorKind::InvalidPolytope);
  EXPECT_EQ(kind_of([] { ProjConvexPolytope(PolyhedralCone::whole(3), Topology::Open); }),
            ErrorKind::InvalidPolytope);
  EXPECT_EQ(kind_of([] {
              ProjConvexPolytope::from_generators({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}}, Topology::Closed);
            }),
            ErrorKind::InvalidPolytope);
  EXPECT_EQ(kind_of([] { ProjConvexPolytope::from_generators({{1, 0, 0}, {0, 1, 0}}, Topology::Open); }),
            ErrorKind::InvalidPolytope);
  // An open slab is allowed.
  EXPECT_NO_THROW(ProjConvexPolytope(PolyhedralCone::from_facets({{1, 0, 0}, {0, 1, 0}}, 3), Topology::Open));
}

TEST(Polytope, EqualityIgnoresTheChoiceOfLift) {
  auto a = triangle(Topology::Closed);
  auto b = ProjConvexPolytope::from_generators({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}, Topology::Closed);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(equal(a, b));
  EXPECT_NE(a, triangle(Topology::Open));
  EXPECT_NE(a, ProjConvexPolytope::from_generators({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, Topology::Closed, Side::Dual));
}

TEST(Membership, Examples) {
  auto closed = triangle(Topology::Closed);
  auto open = triangle(Topology::Open);
  EXPECT_TRUE(membership(closed, {1, 1, 1}));
  EXPECT_TRUE(membership(closed, {-1, -2, -3}));
  EXPECT_TRUE(membership(closed, {1, 0, 0}));
  EXPECT_TRUE(membership(closed, {1, 1, 0}));
  EXPECT_FALSE(membership(closed, {1, -1, 0}));
  EXPECT_TRUE(membership(open, {1, 2, 3}));
  EXPECT_FALSE(membership(open, {1, 1, 0}));
  EXPECT_FALSE(membership(open, {1, 0, 0}));
  EXPECT_THROW(membership(closed, {1, 1}), Error);
}

TEST(Membership, AgreesWithBruteForceOracle) {
  Rng rng(41);
  const auto grid = SampleGrid::directions(3).points();
  for (int i = 0; i < 60; ++i) {
    const auto p = random_polytope(rng);
    for (const auto& x : grid) ASSERT_EQ(membership(p, x), membership_oracle(p, x)) << to_string(x);
  }
}

TEST(Witness, Examples) {
  EXPECT_EQ(witness_functional(triangle(Topology::Closed)), (IntVec{1, 1, 1}));
  auto seg = ProjConvexPolytope::from_generators({{1, 0, 0}, {0, 1, 0}}, Topology::Closed);
  EXPECT_EQ(witness_hyperplane(seg), ProjHyperplane({1, 1, 0}));
}

TEST(Witness, AvoidsThePolytope) {
  Rng rng(42);
  const auto grid = SampleGrid::directions(3).points();
  for (int i = 0; i < 60; ++i) {
    const auto p = random_polytope(rng);
    const ProjHyperplane h = witness_hyperplane(p);
    for (const auto& x : grid) {
      if (membership(p, x)) {
        ASSERT_FALSE(incident(x, h));
      }
    }
  }
}

TEST(SegmentIn, UsesTheLiftsInsideThePolytope) {
  auto wedge = ProjConvexPolytope::from_generators({{1, 0, 0}, {-1, 1, 0}, {0, 0, 1}}, Topology::Closed);
  const ProjPoint p{1, 0, 0}, q{1, -1, 0};
  const Segment s = segment_in(wedge, p, q);
  EXPECT_TRUE(segment_contains(s, {0, 1, 0}));
  EXPECT_FALSE(segment_contains(s, {2, -1, 0}));
  EXPECT_EQ(kind_of([&] { segment_in(wedge, p, p); }), ErrorKind::EqualPoints);
  EXPECT_EQ(kind_of([&] { segment_in(wedge, p, {0, 1, -1}); }), ErrorKind::NotMembers);
}

TEST(SegmentIn, IsTheUniqueSegmentInside) {
  Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    const auto poly = random_polytope(rng);
    const ProjPoint p = random_member(rng, poly);
    const ProjPoint q = random_member(rng, poly);
    if (p == q) continue;
    const Segment s = segment_in(poly, p, q);
    auto [a, b] = segments(p, q);
    const Segment& other = same_segment(a, s) ? b : a;
    ASSERT_TRUE(same_segment(a, s) || same_segment(b, s));
    for (int t = 1; t < 6; ++t) {
      IntVec x(3);
      for (std::size_t k = 0; k < 3; ++k) x[k] = t * s.u[k] + (6 - t) * s.v[k];
      ASSERT_TRUE(membership(poly, ProjPoint(x)));
    }
    // The other arc crosses the witness hyperplane, which misses the polytope.
    const IntVec w = witness_functional(poly);
    IntVec cross(3);
    for (std::size_t k = 0; k < 3; ++k) cross[k] = dot(w, s.v) * s.u[k] - dot(w, s.u) * s.v[k];
    const ProjPoint x(cross);
    EXPECT_TRUE(segment_contains(other, x));
    EXPECT_FALSE(segment_contains(s, x));
    EXPECT_FALSE(membership(poly, x));
  }
}

TEST(RelativeHull, Examples) {
  auto big = triangle(Topology::Closed);
  auto h = relative_hull({ProjPoint{1, 0, 0}, ProjPoint{0, 1, 0}}, big);
  EXPECT_EQ(h, ProjConvexPolytope::from_generators({{1, 0, 0}, {0, 1, 0}}, Topology::Closed));
  EXPECT_EQ(relative_hull({ProjPoint{1, 1, 1}}, big), ProjConvexPolytope::point({1, 1, 1}));
  EXPECT_EQ(kind_of([&] { relative_hull({ProjPoint{1, -1, 0}}, big); }), ErrorKind::NotContained);
  EXPECT_EQ(kind_of([&] { relative_hull({}, big); }), ErrorKind::EmptySet);
  EXPECT_EQ(kind_of([&] {
              relative_hull({ProjPoint{1, 1, 1}, triangle(Topology::Open)}, triangle(Topology::Open));
            }),
            ErrorKind::MixedTopology);
}

TEST(RelativeHull, ExtensiveMonotoneIdempotent) {
  Rng rng(44);
  for (int i = 0; i < 100; ++i) {
    const auto within = random_closed(rng);
    std::vector<HullInput> in;
    for (int k = 0; k < 3; ++k) in.emplace_back(random_member(rng, within));
    const auto h = relative_hull(in, within);
    for (const auto& x : in) EXPECT_TRUE(membership(h, std::get<ProjPoint>(x)));
    EXPECT_TRUE(subset(h, within));
    EXPECT_EQ(relative_hull({h}, within), h);
    auto more = in;
    more.emplace_back(random_member(rng, within));
    EXPECT_TRUE(subset(h, relative_hull(more, within)));
  }
}

TEST(Relations, SubsetDisjointConsistent) {
  auto big = triangle(Topology::Closed);
  auto small = ProjConvexPolytope::from_generators({{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}, Topology::Closed);
  EXPECT_TRUE(subset(small, big));
  EXPECT_FALSE(subset(big, small));
  EXPECT_TRUE(consistent(small, big));
  EXPECT_FALSE(disjoint(small, big));
  EXPECT_TRUE(disjoint(affine_triangle(0, 0), affine_triangle(3, 3)));
  // Touching at the vertex (1, 0) is enough to meet.
  EXPECT_FALSE(disjoint(affine_triangle(0, 0), affine_triangle(1, 0)));
}

TEST(Irreducible, RoundTrip) {
  const IrreducibleConvex c{ProjHyperplane{1, -2, 3}};
  const auto p = irreducible_polytope(c);
  EXPECT_TRUE(is_irreducible(p));
  EXPECT_EQ(as_irreducible(p), c);
  EXPECT_TRUE(membership(p, {1, 0, 0}));
  EXPECT_FALSE(membership(p, {2, 1, 0}));
  EXPECT_FALSE(is_irreducible(triangle(Topology::Open)));
  EXPECT_EQ(kind_of([] { as_irreducible(triangle(Topology::Closed)); }), ErrorKind::InvalidPolytope);
}

TEST(Separate, DisjointTriangles) {
  auto k = affine_triangle(0, 0), l = affine_triangle(3, 3);
  auto uv = separate(k, l);
  ASSERT_TRUE(uv);
  EXPECT_TRUE(uv->first.is_open());
  EXPECT_TRUE(disjoint(uv->first, uv->second));
  EXPECT_TRUE(subset(k, uv->first));
  EXPECT_TRUE(subset(l, uv->second));
  EXPECT_EQ(kind_of([&] { separate(k, k); }), ErrorKind::NotDisjoint);
  EXPECT_EQ(kind_of([&] { separate(k, triangle(Topology::Open)); }), ErrorKind::MixedTopology);
}

TEST(Separate, RandomDisjointPairs) {
  Rng rng(45);
  int done = 0;
  for (int i = 0; i < 300 && done < 40; ++i) {
    const auto k = random_closed(rng, 3, 4, 5), l = random_closed(rng, 3, 4, 5);
    if (!disjoint(k, l)) continue;
    ++done;
    auto uv = separate(k, l);
    ASSERT_TRUE(uv);
    EXPECT_TRUE(disjoint(uv->first, uv->second));
    EXPECT_TRUE(subset(k, uv->first) && subset(l, uv->second));
  }
  EXPECT_GT(done, 10);
}
