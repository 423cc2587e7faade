#include <gtest/gtest.h>

#include "projconv/check.hpp"
#include "projconv/duality.hpp"
#include "projconv/random.hpp"

using namespace projconv;
using check_detail::coordinate_complements;

namespace {

ProjConvexPolytope closed_triangle() {
  return ProjConvexPolytope::from_generators({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, Topology::Closed);
}

}  // namespace

TEST(Phi, OfAPoint) {
  const auto phi = phi_point({1, 0, 0});
  EXPECT_EQ(phi.side(), Side::Dual);
  EXPECT_TRUE(phi.is_open());
  EXPECT_TRUE(is_irreducible(phi));
  EXPECT_TRUE(membership(phi, {1, 1, 0}));
  EXPECT_FALSE(membership(phi, {0, 1, 0}));
  EXPECT_EQ(phi_point({1, 0, 0}, Side::Dual).side(), Side::Primal);
}

TEST(Phi, OfPolytopes) {
  const auto t = closed_triangle();
  const auto phi = phi_polytope(t);
  EXPECT_EQ(phi, ProjConvexPolytope::from_generators({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, Topology::Open, Side::Dual));
  EXPECT_EQ(phi_polytope(phi), t);
  // Open half-plane x > 0 goes to the single dual point e1.
  const ProjConvexPolytope half(PolyhedralCone::from_facets({{1, 0, 0}}, 3), Topology::Open);
  EXPECT_EQ(phi_polytope(half), ProjConvexPolytope::point({1, 0, 0}, Side::Dual));
  // Open slab x > 0, y > 0 goes to the closed dual segment [e1, e2].
  const ProjConvexPolytope slab(PolyhedralCone::from_facets({{1, 0, 0}, {0, 1, 0}}, 3), Topology::Open);
  EXPECT_EQ(phi_polytope(slab),
            ProjConvexPolytope::from_generators({{1, 0, 0}, {0, 1, 0}}, Topology::Closed, Side::Dual));
}

TEST(Phi, ThreeLinesGoToThreePoints) {
  const MultiConvexSet m = decompose(coordinate_complements());
  const MultiConvexSet phi = phi_multiconvex(m);
  EXPECT_EQ(phi.side(), Side::Dual);
  EXPECT_EQ(phi.topology(), Topology::Closed);
  std::vector<ProjConvexPolytope> pts;
  for (const auto& p : {ProjPoint{1, 0, 0}, ProjPoint{0, 1, 0}, ProjPoint{0, 0, 1}})
    pts.push_back(ProjConvexPolytope::point(p, Side::Dual));
  std::sort(pts.begin(), pts.end());
  EXPECT_EQ(phi.pieces(), pts);
  EXPECT_EQ(phi_multiconvex(phi), m);
}

TEST(Phi, MatchesTheDefinitionOnAGrid) {
  Rng rng(61);
  const auto primal = SampleGrid::directions(2).points();
  int used = 0;
  for (int i = 0; i < 40; ++i) {
    const bool open = rng.coin();
    auto draw = [&] { return open ? random_open(rng, 3, 4, 4) : random_closed(rng, 3, 4, 4); };
    const MultiConvexSet m = decompose({draw(), draw()});
    if (m.empty()) continue;
    ++used;
    const MultiConvexSet phi = phi_multiconvex(m);
    // Sampled check: a hyperplane in Φ(M) misses every sampled member of M.
    for (const auto& h : primal) {
      if (!membership(phi, h)) continue;
      for (const auto& x : primal) {
        if (membership(m, x)) {
          ASSERT_FALSE(incident(x, as_hyperplane(h)));
        }
      }
    }
  }
  EXPECT_GT(used, 10);
}

TEST(Saturation, Examples) {
  const MultiConvexSet pts = saturate({ProjPoint{1, 0, 0}, ProjPoint{0, 1, 0}, ProjPoint{0, 0, 1}});
  EXPECT_EQ(degree(pts), 3u);
  EXPECT_EQ(pts.topology(), Topology::Closed);
  const MultiConvexSet m = decompose(coordinate_complements());
  EXPECT_TRUE(is_saturated(m));
  auto three = m.pieces();
  three.pop_back();
  EXPECT_EQ(saturate_union(three), m);
  const auto t = closed_triangle();
  EXPECT_EQ(saturate(t), t);
}

TEST(Galois, Examples) {
  const std::vector<ProjPoint> s{ProjPoint{1, 0, 0}};
  EXPECT_TRUE(galois_check(s, {ProjPoint{0, 1, 0}}));
  EXPECT_FALSE(galois_relations(s, {ProjPoint{0, 1, 0}}).s_in_phi_t);
  EXPECT_TRUE(galois_relations(s, {ProjPoint{1, 0, 0}}).s_in_phi_t);
  EXPECT_TRUE(galois_relations(s, {ProjPoint{1, 0, 0}}).t_in_phi_s);
}

TEST(Galois, RelationsAgreeOnRandomSets) {
  Rng rng(62);
  for (int i = 0; i < 200; ++i) {
    std::vector<ProjPoint> s, t;
    for (long long k = rng.uniform(1, 3); k > 0; --k) s.push_back(rng.point(3, 3));
    for (long long k = rng.uniform(1, 3); k > 0; --k) t.push_back(rng.point(3, 3));
    EXPECT_TRUE(galois_check(s, t));
  }
}

TEST(Triangle, MapsAreInverseOnThreeLines) {
  const MultiConvexSet m = decompose(coordinate_complements());
  const auto cocomps = cocomponents(phi_multiconvex(m));
  ASSERT_EQ(cocomps.size(), m.pieces().size());
  for (const auto& n : components(m)) {
    const auto right = triangle_right(n, m);
    EXPECT_NE(std::find(cocomps.begin(), cocomps.end(), right), cocomps.end());
    EXPECT_EQ(triangle_left(right), n);
  }
  EXPECT_THROW(triangle_right(coordinate_complements().front(), m), Error);
}
