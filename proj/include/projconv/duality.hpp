#ifndef PROJCONV_DUALITY_HPP
#define PROJCONV_DUALITY_HPP

#include <algorithm>
#include <vector>

#include "projconv/multiconvex.hpp"

namespace projconv {

using DualitySide = Side;

/// Φ({p}): every hyperplane not through p, i.e. the dual complement of p's hyperplane.
inline ProjConvexPolytope phi_point(const ProjPoint& p, Side side = Side::Primal) {
  return {PolyhedralCone::from_facets({p.coords()}, p.ambient_dim()), Topology::Open, flip(side)};
}

/// Φ on a polytope: the dual cone with the topology tag and side flipped.
inline ProjConvexPolytope phi_polytope(const ProjConvexPolytope& poly) {
  return {dual_cone(poly.cone()), flip(poly.topology()), flip(poly.side())};
}

/// Φ(∪ pieces) = ∩ Φ(piece).
inline MultiConvexSet phi_union(const std::vector<ProjConvexPolytope>& pieces) {
  if (pieces.empty()) throw Error(ErrorKind::EmptySet, "Φ of the empty set is the whole space");
  std::vector<ProjConvexPolytope> images;
  images.reserve(pieces.size());
  for (const auto& p : pieces) images.push_back(phi_polytope(p));
  return decompose(images);
}

inline MultiConvexSet phi_points(const std::vector<ProjPoint>& points, Side side = Side::Primal) {
  if (points.empty()) throw Error(ErrorKind::EmptySet, "Φ of the empty set is the whole space");
  std::vector<ProjConvexPolytope> images;
  for (const auto& p : points) images.push_back(phi_point(p, side));
  return decompose(images);
}

/// Φ on a nonempty multi-convex set of uniform topology.
///
/// Open: Φ(M) = ∩ Φ(N) over components. Closed: Φ(M) = ∪ Φ(N) over
/// co-components, rebuilt as a multi-convex set from those pieces.
inline MultiConvexSet phi_multiconvex(const MultiConvexSet& m) {
  if (m.empty()) throw Error(ErrorKind::EmptySet, "Φ of the empty set is the whole space");
  if (m.topology() == Topology::Open) return phi_union(m.pieces());
  std::vector<ProjConvexPolytope> images;
  for (const auto& n : cocomponents(m)) images.push_back(phi_polytope(n));
  return from_components(images);
}

inline MultiConvexSet phi_checked_nonempty(const MultiConvexSet& x) {
  if (x.empty()) throw Error(ErrorKind::WholeSpace, "input meets every hyperplane; its saturation is the whole space");
  return phi_multiconvex(x);
}

/// Φ∘Φ of a finite point set.
inline MultiConvexSet saturate(const std::vector<ProjPoint>& points, Side side = Side::Primal) {
  return phi_checked_nonempty(phi_points(points, side));
}

/// Φ∘Φ of a union of polytopes of one topology.
inline MultiConvexSet saturate_union(const std::vector<ProjConvexPolytope>& pieces) {
  return phi_checked_nonempty(phi_union(pieces));
}

inline MultiConvexSet saturate(const MultiConvexSet& m) {
  if (m.empty()) throw Error(ErrorKind::EmptySet, "saturation of the empty set");
  return phi_checked_nonempty(phi_multiconvex(m));
}

inline ProjConvexPolytope saturate(const ProjConvexPolytope& p) { return phi_polytope(phi_polytope(p)); }

inline bool is_saturated(const MultiConvexSet& m) { return saturate(m) == m; }

struct GaloisRelations {
  bool s_in_phi_t = false;
  bool t_in_phi_s = false;
  bool agree() const { return s_in_phi_t == t_in_phi_s; }
};

/// Evaluates S ⊆ Φ(T) and T ⊆ Φ(S) by membership in the computed images.
inline GaloisRelations galois_relations(const std::vector<ProjPoint>& s, const std::vector<ProjPoint>& t) {
  const MultiConvexSet phi_t = phi_points(t, Side::Dual);
  const MultiConvexSet phi_s = phi_points(s, Side::Primal);
  GaloisRelations g;
  g.s_in_phi_t = std::all_of(s.begin(), s.end(), [&](const ProjPoint& p) { return membership(phi_t, p); });
  g.t_in_phi_s = std::all_of(t.begin(), t.end(), [&](const ProjPoint& q) { return membership(phi_s, q); });
  return g;
}

inline bool galois_check(const std::vector<ProjPoint>& s, const std::vector<ProjPoint>& t) {
  return galois_relations(s, t).agree();
}

/// Pointwise set containment of multi-convex sets (every component lies in some component).
inline bool subset(const MultiConvexSet& a, const MultiConvexSet& b) {
  return std::all_of(a.cells().begin(), a.cells().end(), [&](const Cell& ca) {
    return std::any_of(b.cells().begin(), b.cells().end(),
                       [&](const Cell& cb) { return subset(ca.polytope, cb.polytope); });
  });
}

/// N ↦ hull of Φ(M) relative to Φ(N), for a component N of M.
inline ProjConvexPolytope triangle_right(const ProjConvexPolytope& n, const MultiConvexSet& m) {
  if (m.empty()) throw Error(ErrorKind::EmptyMultiConvex, "triangle_right on empty set");
  const auto comps = components(m);
  if (std::find(comps.begin(), comps.end(), n) == comps.end())
    throw Error(ErrorKind::NotAComponent, "triangle_right expects a component of M");
  if (!is_saturated(m)) throw Error(ErrorKind::NotSaturated, "triangle_right expects a saturated set");
  const MultiConvexSet phi_m = phi_multiconvex(m);
  std::vector<HullInput> inputs;
  for (const auto& c : phi_m.pieces()) inputs.emplace_back(c);
  return relative_hull(inputs, phi_polytope(n));
}

/// M' ↦ Φ(sat(M')), for a co-component M' of Φ(M).
inline ProjConvexPolytope triangle_left(const ProjConvexPolytope& cocomponent) {
  return phi_polytope(saturate(cocomponent));
}

}  // namespace projconv

#endif  // PROJCONV_DUALITY_HPP
