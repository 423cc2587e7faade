#ifndef PROJCONV_MULTICONVEX_HPP
#define PROJCONV_MULTICONVEX_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "projconv/convexset.hpp"

namespace projconv {

/// One sign per family member, first entry +1 (global flip quotient).
struct SignVector {
  std::vector<int> signs;

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend auto operator<=>(const SignVector&, const SignVector&) = default;
};

struct Cell {
  SignVector signs;
  ProjConvexPolytope polytope;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Intersection of a family of polytopes of one topology, split into sign cells.
///
/// The cell for sign vector e has cone ∩ e_i * cone(S_i). Cells are pairwise
/// disjoint and convex, so they are exactly the components; they are kept
/// sorted by polytope, which makes the cell list a canonical form of the
/// point set regardless of the generating family.
class MultiConvexSet {
 public:
  MultiConvexSet() = default;
  MultiConvexSet(std::vector<ProjConvexPolytope> family, std::vector<Cell> cells)
      : family_(std::move(family)), cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end(),
              [](const Cell& a, const Cell& b) { return a.polytope < b.polytope; });
  }

  const std::vector<ProjConvexPolytope>& family() const { return family_; }
  const std::vector<Cell>& cells() const { return cells_; }
  Topology topology() const { return family_.front().topology(); }
  Side side() const { return family_.front().side(); }
  std::size_t ambient_dim() const { return family_.front().ambient_dim(); }
  bool empty() const { return cells_.empty(); }

  std::vector<ProjConvexPolytope> pieces() const {
    std::vector<ProjConvexPolytope> out;
    for (const auto& c : cells_) out.push_back(c.polytope);
    return out;
  }

  /// Same point set: equal topology, side and component lists.
  friend bool operator==(const MultiConvexSet& a, const MultiConvexSet& b) {
    if (a.family_.empty() || b.family_.empty()) return a.family_.empty() == b.family_.empty();
    return a.topology() == b.topology() && a.side() == b.side() && a.pieces() == b.pieces();
  }

 private:
  std::vector<ProjConvexPolytope> family_;
  std::vector<Cell> cells_;
};

namespace detail {

inline void check_uniform(const std::vector<ProjConvexPolytope>& family, const char* where) {
  if (family.empty()) throw Error(ErrorKind::EmptySet, std::string(where) + ": empty family");
  for (const auto& p : family) {
    check_dims(p.ambient_dim(), family.front().ambient_dim(), where);
    if (p.side() != family.front().side()) throw Error(ErrorKind::SideMismatch, where);
    if (p.topology() != family.front().topology())
      throw Error(ErrorKind::MixedTopology, std::string(where) + ": family mixes open and closed sets");
  }
}

inline bool cell_nonempty(const PolyhedralCone& c, Topology t) {
  return t == Topology::Open ? c.is_fulldim() : !c.is_zero();
}

/// Depth-first search over sign liftings s (s_0 = +1) of `pieces`, pruning any
/// prefix whose lifted pieces admit no common strict witness. `extra` may add
/// rows shared by every node. Calls `leaf` with (signs, witness) for every
/// complete feasible lifting; stops early when `leaf` returns false.
///
/// Without extra rows the witnesses of s * piece form the dual cone (minus 0
/// for open pieces, its interior for closed ones), so the search intersects
/// dual cones instead of solving an LP per node.
inline void for_each_consistent_lifting(
    const std::vector<ProjConvexPolytope>& pieces, const std::function<void(LinSystem&)>& extra,
    const std::function<bool(const std::vector<int>&, const Vec&)>& leaf) {
  const std::size_t d = pieces.front().ambient_dim();
  std::vector<int> signs;
  bool stop = false;
  if (!extra) {
    const bool open = pieces.front().is_open();
    std::vector<PolyhedralCone> duals;
    for (const auto& p : pieces) duals.push_back(dual_cone(p.cone()));
    auto feasible = [&](const PolyhedralCone& c) { return open ? !c.is_zero() : c.is_fulldim(); };
    auto witness = [&](const PolyhedralCone& c) {
      if (auto x = interior_point(c)) return to_rat(*x);
      IntVec x(d, Int(0));
      for (const auto& r : c.rays()) x = added(x, r);
      return to_rat(c.rays().empty() ? c.lineality().front() : x);
    };
    std::function<void(const PolyhedralCone&)> walk = [&](const PolyhedralCone& acc) {
      if (stop || !feasible(acc)) return;
      if (signs.size() == pieces.size()) {
        if (!leaf(signs, witness(acc))) stop = true;
        return;
      }
      const auto& next = duals[signs.size()];
      for (int s : {1, -1}) {
        if (signs.empty() && s < 0) continue;
        signs.push_back(s);
        walk(intersect(acc, s > 0 ? next : next.negated()));
        signs.pop_back();
        if (stop) return;
      }
    };
    walk(PolyhedralCone::whole(d));
    return;
  }
  std::function<void()> rec = [&]() {
    if (stop) return;
    LinSystem sys(d);
    if (extra) extra(sys);
    for (std::size_t j = 0; j < signs.size(); ++j) add_witness_rows(sys, pieces[j], signs[j]);
    auto w = solve_feasibility(sys);
    if (!w) return;
    if (signs.size() == pieces.size()) {
      if (!leaf(signs, *w)) stop = true;
      return;
    }
    for (int s : {1, -1}) {
      if (signs.empty() && s < 0) continue;
      signs.push_back(s);
      rec();
      signs.pop_back();
      if (stop) return;
    }
  };
  rec();
}

}  // namespace detail

/// Enumerates the nonempty sign cells of the family's intersection.
inline MultiConvexSet decompose(const std::vector<ProjConvexPolytope>& family) {
  detail::check_uniform(family, "decompose");
  const Topology topo = family.front().topology();
  const Side side = family.front().side();
  std::vector<Cell> cells;
  std::vector<int> signs;
  std::function<void(const PolyhedralCone&)> rec = [&](const PolyhedralCone& acc) {
    if (!detail::cell_nonempty(acc, topo)) return;
    if (signs.size() == family.size()) {
      cells.push_back({SignVector{signs}, ProjConvexPolytope(acc, topo, side)});
      return;
    }
    const auto& next = family[signs.size()].cone();
    for (int s : {1, -1}) {
      if (signs.empty() && s < 0) continue;
      signs.push_back(s);
      rec(intersect(acc, s > 0 ? next : next.negated()));
      signs.pop_back();
    }
  };
  rec(PolyhedralCone::whole(family.front().ambient_dim()));
  return MultiConvexSet(family, std::move(cells));
}

inline std::vector<ProjConvexPolytope> components(const MultiConvexSet& m) { return m.pieces(); }
inline std::size_t degree(const MultiConvexSet& m) { return m.cells().size(); }

inline bool membership(const MultiConvexSet& m, const ProjPoint& p) {
  return std::any_of(m.cells().begin(), m.cells().end(),
                     [&](const Cell& c) { return membership(c.polytope, p); });
}

/// Minimal convex supersets of a union of pieces of one topology: the hulls
/// of the sign liftings that admit a common strict witness.
inline std::vector<ProjConvexPolytope> cocomponents_of_pieces(const std::vector<ProjConvexPolytope>& pieces) {
  if (pieces.empty()) throw Error(ErrorKind::EmptyMultiConvex, "co-components of an empty set");
  detail::check_uniform(pieces, "cocomponents");
  const std::size_t d = pieces.front().ambient_dim();
  std::vector<ProjConvexPolytope> out;
  detail::for_each_consistent_lifting(pieces, nullptr, [&](const std::vector<int>& s, const Vec&) {
    std::vector<IntVec> rays, lin;
    for (std::size_t j = 0; j < pieces.size(); ++j) {
      const auto& c = pieces[j].cone();
      for (const auto& r : c.rays()) rays.push_back(s[j] > 0 ? r : negated(r));
      lin.insert(lin.end(), c.lineality().begin(), c.lineality().end());
    }
    out.push_back(pieces.front().with_cone(PolyhedralCone::from_generators(rays, d, lin)));
    return true;
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<ProjConvexPolytope> cocomponents(const MultiConvexSet& m) {
  if (m.empty()) throw Error(ErrorKind::EmptyMultiConvex, "co-components of an empty multi-convex set");
  return cocomponents_of_pieces(m.pieces());
}

inline std::size_t codegree(const MultiConvexSet& m) { return cocomponents(m).size(); }

/// Least multi-convex superset of a union of pieces: the intersection of its co-components.
inline MultiConvexSet multiconvex_hull(const std::vector<ProjConvexPolytope>& pieces) {
  auto family = cocomponents_of_pieces(pieces);
  if (family.empty()) throw Error(ErrorKind::WholeSpace, "no convex set contains the union");
  return decompose(family);
}

/// The multi-convex set whose components are exactly `pieces`.
///
/// Throws NotSaturated when the union is not multi-convex (its hull has
/// extra components).
inline MultiConvexSet from_components(const std::vector<ProjConvexPolytope>& pieces) {
  MultiConvexSet m = multiconvex_hull(pieces);
  auto want = pieces;
  std::sort(want.begin(), want.end());
  if (m.pieces() != want)
    throw Error(ErrorKind::NotSaturated, "union of pieces is not a multi-convex set");
  return m;
}

/// An irreducible convex set containing every cell of m and avoiding p, or
/// nullopt when p lies in the saturation of m.
inline std::optional<IrreducibleConvex> separating_irreducible(const MultiConvexSet& m, const ProjPoint& p) {
  if (m.empty()) throw Error(ErrorKind::EmptyMultiConvex, "separating_irreducible on empty set");
  check_dims(m.ambient_dim(), p.ambient_dim(), "separating_irreducible");
  std::optional<IrreducibleConvex> found;
  detail::for_each_consistent_lifting(
      m.pieces(), [&](LinSystem& sys) { sys.add(p.coords(), Relation::EQ); },
      [&](const std::vector<int>&, const Vec& w) {
        found = IrreducibleConvex{ProjHyperplane(w)};
        return false;
      });
  return found;
}

}  // namespace projconv

#endif  // PROJCONV_MULTICONVEX_HPP
