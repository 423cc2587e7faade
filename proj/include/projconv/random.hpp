#ifndef PROJCONV_RANDOM_HPP
#define PROJCONV_RANDOM_HPP

// Seeded random instances for the property suites.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "projconv/scene.hpp"

namespace projconv {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long long uniform(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(eng_); }
  bool coin() { return uniform(0, 1) == 1; }

  IntVec nonzero_vector(std::size_t d, long long bound) {
    for (;;) {
      IntVec v(d);
      for (auto& x : v) x = uniform(-bound, bound);
      if (!is_zero(v)) return v;
    }
  }

  ProjPoint point(std::size_t d, long long bound) { return ProjPoint(nonzero_vector(d, bound)); }

  Rat rational(long long lo, long long hi, long long den) { return Rat(uniform(lo * den, hi * den), den); }

 private:
  std::mt19937_64 eng_;
};

/// Closed polytope from at most `max_gens` random generators, retried until salient.
inline ProjConvexPolytope random_closed(Rng& rng, std::size_t d = 3, std::size_t max_gens = 8, long long bound = 9) {
  const std::size_t n = static_cast<std::size_t>(rng.uniform(1, static_cast<long long>(max_gens)));
  for (;;) {
    std::vector<IntVec> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(rng.nonzero_vector(d, bound));
    auto c = PolyhedralCone::from_generators(gens, d);
    if (c.is_salient() && !c.is_zero()) return {std::move(c), Topology::Closed};
  }
}

/// Open polytope: the interior of a random generated cone or a random
/// intersection of half-spaces, retried until full-dimensional and proper.
inline ProjConvexPolytope random_open(Rng& rng, std::size_t d = 3, std::size_t max_gens = 8, long long bound = 9) {
  const bool by_facets = rng.coin();
  const std::size_t lo = by_facets ? 1 : d;
  const std::size_t n = static_cast<std::size_t>(rng.uniform(static_cast<long long>(lo), static_cast<long long>(max_gens)));
  for (;;) {
    std::vector<IntVec> vs;
    for (std::size_t i = 0; i < n; ++i) vs.push_back(rng.nonzero_vector(d, bound));
    auto c = by_facets ? PolyhedralCone::from_facets(vs, d) : PolyhedralCone::from_generators(vs, d);
    if (c.is_fulldim() && !c.is_whole()) return {std::move(c), Topology::Open};
  }
}

inline ProjConvexPolytope random_polytope(Rng& rng, std::size_t d = 3) {
  return rng.coin() ? random_closed(rng, d) : random_open(rng, d);
}

/// A random member: a positive combination of the generators (strictly
/// positive on every generator for open polytopes, so it is interior).
inline ProjPoint random_member(Rng& rng, const ProjConvexPolytope& p) {
  const auto gens = p.cone().generators();
  for (;;) {
    IntVec x(p.ambient_dim(), Int(0));
    for (const auto& g : gens) {
      const long long w = rng.uniform(p.is_open() ? 1 : 0, 5);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += w * g[i];
    }
    if (!is_zero(x) && lifted_contains(p, x)) return ProjPoint(x);
  }
}

/// k lines in general position with coefficients in [-bound, bound].
inline std::vector<ProjHyperplane> random_generic_lines(Rng& rng, std::size_t k, long long bound = 3) {
  for (;;) {
    std::vector<ProjHyperplane> hs;
    for (std::size_t i = 0; i < k; ++i) hs.emplace_back(rng.nonzero_vector(3, bound));
    if (in_general_position(hs)) return hs;
  }
}

/// Counterclockwise convex hull (monotone chain) without collinear points.
inline std::vector<AffinePoint> convex_hull(std::vector<AffinePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<AffinePoint> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

/// Strict separation of two convex polygons by one of their edge normals.
inline bool polygons_disjoint(const std::vector<AffinePoint>& a, const std::vector<AffinePoint>& b) {
  auto separated_by_edges_of = [](const std::vector<AffinePoint>& p, const std::vector<AffinePoint>& q) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto& s = p[i];
      const auto& t = p[(i + 1) % p.size()];
      // p lies left of (or on) every edge; q strictly right of this one.
      if (std::all_of(q.begin(), q.end(), [&](const AffinePoint& x) { return cross(s, t, x) < 0; })) return true;
    }
    return false;
  };
  return separated_by_edges_of(a, b) || separated_by_edges_of(b, a);
}

/// 2..4 pairwise disjoint convex polygons with rational vertices in [-5, 5]^2.
inline Scene random_scene(Rng& rng, std::size_t min_polys = 2, std::size_t max_polys = 4) {
  const std::size_t n = static_cast<std::size_t>(rng.uniform(static_cast<long long>(min_polys),
                                                             static_cast<long long>(max_polys)));
  Scene s;
  while (s.polygons.size() < n) {
    const long long cx = rng.uniform(-4, 4), cy = rng.uniform(-4, 4);
    std::vector<AffinePoint> pts;
    const long long m = rng.uniform(3, 6);
    for (long long i = 0; i < m; ++i)
      pts.emplace_back(Rat(cx) + rng.rational(-1, 1, 4), Rat(cy) + rng.rational(-1, 1, 4));
    auto hull = convex_hull(pts);
    if (hull.size() < 3) continue;
    bool ok = std::all_of(s.polygons.begin(), s.polygons.end(),
                          [&](const Polygon& q) { return polygons_disjoint(hull, q.vertices); });
    if (!ok) continue;
    s.polygons.push_back({"S" + std::to_string(s.polygons.size() + 1), std::move(hull)});
  }
  return s;
}

}  // namespace projconv

#endif  // PROJCONV_RANDOM_HPP
