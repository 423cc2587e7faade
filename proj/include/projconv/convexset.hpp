#ifndef PROJCONV_CONVEXSET_HPP
#define PROJCONV_CONVEXSET_HPP

#include <optional>
#include <utility>
#include <tuple>
#include <variant>
#include <vector>

#include "projconv/cone.hpp"
#include "projconv/projective.hpp"

namespace projconv {

enum class Topology { Open, Closed };

/// Which space an object lives in; the duality operator flips it.
enum class Side { Primal, Dual };

inline Topology flip(Topology t) { return t == Topology::Open ? Topology::Closed : Topology::Open; }
inline Side flip(Side s) { return s == Side::Primal ? Side::Dual : Side::Primal; }

/// Projective convex polytope: pi(C \ {0}) for a Closed tag, pi(int C) for Open.
///
/// The stored cone is the canonical one of the two lifts C, -C.
/// Closed requires C salient and nonzero. Open requires C full-dimensional and
/// not the whole space (so half-spaces and slabs are allowed). Under these
/// two invariants some hyperplane always avoids the set.
class ProjConvexPolytope {
 public:
  ProjConvexPolytope() = default;

  ProjConvexPolytope(PolyhedralCone cone, Topology topology, Side side = Side::Primal)
      : cone_(std::move(cone)), topology_(topology), side_(side) {
    if (topology_ == Topology::Closed) {
      if (cone_.is_zero()) throw Error(ErrorKind::InvalidPolytope, "closed polytope needs a nonzero cone");
      if (!cone_.is_salient()) throw Error(ErrorKind::InvalidPolytope, "closed polytope needs a salient cone");
    } else {
      if (!cone_.is_fulldim())
        throw Error(ErrorKind::InvalidPolytope, "open polytope needs a full-dimensional cone");
      if (cone_.is_whole()) throw Error(ErrorKind::InvalidPolytope, "open polytope cannot be the whole space");
    }
    if (cone_.ambient_dim() < 2)
      throw Error(ErrorKind::DimensionMismatch, "projective polytopes need ambient dimension >= 2");
    // C and -C describe the same set; keep the lift whose facet sum has a
    // positive leading entry.
    IntVec h(cone_.ambient_dim(), Int(0));
    for (const auto& f : cone_.facets()) h = added(h, f);
    if (normalize_primitive(h) != primitive(h)) cone_ = cone_.negated();
  }

  static ProjConvexPolytope from_generators(const std::vector<IntVec>& gens, Topology t,
                                            Side side = Side::Primal) {
    if (gens.empty()) throw Error(ErrorKind::InvalidPolytope, "no generators");
    return {PolyhedralCone::from_generators(gens, gens.front().size()), t, side};
  }

  static ProjConvexPolytope point(const ProjPoint& p, Side side = Side::Primal) {
    return from_generators({p.coords()}, Topology::Closed, side);
  }

  static ProjConvexPolytope segment(const Segment& s, Side side = Side::Primal) {
    IntVec v = s.sign == SegmentSign::NonNegative ? s.v : negated(s.v);
    return from_generators({s.u, v}, Topology::Closed, side);
  }

  const PolyhedralCone& cone() const { return cone_; }
  Topology topology() const { return topology_; }
  Side side() const { return side_; }
  std::size_t ambient_dim() const { return cone_.ambient_dim(); }
  bool is_open() const { return topology_ == Topology::Open; }

  ProjConvexPolytope with_cone(PolyhedralCone c) const { return {std::move(c), topology_, side_}; }

  friend bool operator==(const ProjConvexPolytope&, const ProjConvexPolytope&) = default;

  friend bool operator<(const ProjConvexPolytope& a, const ProjConvexPolytope& b) {
    return std::tie(a.side_, a.topology_, a.cone_.rays(), a.cone_.lineality()) <
           std::tie(b.side_, b.topology_, b.cone_.rays(), b.cone_.lineality());
  }

 private:
  PolyhedralCone cone_;
  Topology topology_ = Topology::Closed;
  Side side_ = Side::Primal;
};

inline void check_compatible(const ProjConvexPolytope& a, const ProjConvexPolytope& b, const char* where) {
  check_dims(a.ambient_dim(), b.ambient_dim(), where);
  if (a.side() != b.side()) throw Error(ErrorKind::SideMismatch, where);
}

/// True if x (one representative, not its antipode) lies in the lifted set.
template <class T>
bool lifted_contains(const ProjConvexPolytope& p, const std::vector<T>& x) {
  if (is_zero(x)) return false;
  return p.is_open() ? p.cone().contains_interior(x) : p.cone().contains(x);
}

/// The representative of p lying in P's cone, if p is a member.
inline std::optional<IntVec> lift(const ProjConvexPolytope& poly, const ProjPoint& p) {
  check_dims(poly.ambient_dim(), p.ambient_dim(), "lift");
  if (lifted_contains(poly, p.coords())) return p.coords();
  IntVec m = negated(p.coords());
  if (lifted_contains(poly, m)) return m;
  return std::nullopt;
}

inline bool membership(const ProjConvexPolytope& poly, const ProjPoint& p) { return lift(poly, p).has_value(); }

/// Oriented functional strictly positive on the lifted set: the sum of the facets.
inline IntVec witness_functional(const ProjConvexPolytope& poly) {
  IntVec h(poly.ambient_dim(), Int(0));
  for (const auto& f : poly.cone().facets()) h = added(h, f);
  return primitive(h);
}

inline ProjHyperplane witness_hyperplane(const ProjConvexPolytope& poly) {
  return ProjHyperplane(witness_functional(poly));
}

/// Rows forcing h to be strictly positive on sign * (lifted set of poly).
inline void add_witness_rows(LinSystem& sys, const ProjConvexPolytope& poly, int sign) {
  const auto& c = poly.cone();
  auto oriented = [&](const IntVec& v) { return sign > 0 ? v : negated(v); };
  if (!poly.is_open()) {
    for (const auto& r : c.rays()) sys.add(oriented(r), Relation::GT);
    return;
  }
  for (const auto& r : c.rays()) sys.add(oriented(r), Relation::GE);
  for (const auto& l : c.lineality()) sys.add(l, Relation::EQ);
  sys.add(oriented(*interior_point(c)), Relation::GT);
}

/// Rows describing the lifted set itself (x in cone, strictly when open).
inline void add_membership_rows(LinSystem& sys, const ProjConvexPolytope& poly, int sign) {
  const auto& c = poly.cone();
  auto oriented = [&](const IntVec& v) { return sign > 0 ? v : negated(v); };
  if (poly.is_open()) {
    for (const auto& f : c.facets()) sys.add(oriented(f), Relation::GT);
    return;
  }
  for (const auto& e : c.equations()) sys.add(e, Relation::EQ);
  for (const auto& f : c.facets()) sys.add(oriented(f), Relation::GE);
  sys.add(oriented(witness_functional(poly)), Relation::GT);
}

/// A hyperplane avoiding both polytopes (for some lifting of b), if any.
inline std::optional<IntVec> common_witness(const ProjConvexPolytope& a, const ProjConvexPolytope& b,
                                            int* b_sign = nullptr) {
  check_compatible(a, b, "common_witness");
  for (int s : {1, -1}) {
    LinSystem sys(a.ambient_dim());
    add_witness_rows(sys, a, 1);
    add_witness_rows(sys, b, s);
    if (auto h = solve_feasibility(sys)) {
      if (b_sign) *b_sign = s;
      return primitive(*h);
    }
  }
  return std::nullopt;
}

inline bool consistent(const ProjConvexPolytope& a, const ProjConvexPolytope& b) {
  return common_witness(a, b).has_value();
}

inline bool disjoint(const ProjConvexPolytope& a, const ProjConvexPolytope& b) {
  check_compatible(a, b, "disjoint");
  for (int s : {1, -1}) {
    LinSystem sys(a.ambient_dim());
    add_membership_rows(sys, a, 1);
    add_membership_rows(sys, b, s);
    if (solve_feasibility(sys)) return false;
  }
  return true;
}

/// The orientation of a's cone that places a inside b, if a is a subset of b.
inline std::optional<PolyhedralCone> lifted_into(const ProjConvexPolytope& a, const ProjConvexPolytope& b) {
  check_compatible(a, b, "subset");
  for (const auto& cand : {a.cone(), a.cone().negated()}) {
    bool ok;
    if (b.is_open() && !a.is_open()) {
      ok = true;
      for (const auto& r : cand.rays())
        if (!b.cone().contains_interior(r)) ok = false;
    } else {
      ok = b.cone().contains(cand);
    }
    if (ok) return cand;
  }
  return std::nullopt;
}

inline bool subset(const ProjConvexPolytope& a, const ProjConvexPolytope& b) {
  return lifted_into(a, b).has_value();
}

inline bool equal(const ProjConvexPolytope& a, const ProjConvexPolytope& b) { return a == b; }

/// The segment joining p and q that lies in the polytope.
inline Segment segment_in(const ProjConvexPolytope& poly, const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw Error(ErrorKind::EqualPoints, "segment_in needs distinct points");
  auto lp = lift(poly, p);
  auto lq = lift(poly, q);
  if (!lp || !lq) throw Error(ErrorKind::NotMembers, "segment_in endpoints must lie in the polytope");
  return Segment{*lp, *lq, SegmentSign::NonNegative};
}

using HullInput = std::variant<ProjPoint, ProjConvexPolytope>;

/// Least convex subset of `within` containing every input.
inline ProjConvexPolytope relative_hull(const std::vector<HullInput>& inputs, const ProjConvexPolytope& within) {
  if (inputs.empty()) throw Error(ErrorKind::EmptySet, "relative_hull of nothing");
  std::vector<IntVec> rays, lin;
  bool any_open = false, any_closed = false;
  for (const auto& in : inputs) {
    if (const auto* p = std::get_if<ProjPoint>(&in)) {
      auto l = lift(within, *p);
      if (!l) throw Error(ErrorKind::NotContained, "hull point " + to_string(*p) + " outside the polytope");
      rays.push_back(*l);
      any_closed = true;
    } else {
      const auto& poly = std::get<ProjConvexPolytope>(in);
      auto c = lifted_into(poly, within);
      if (!c) throw Error(ErrorKind::NotContained, "hull piece outside the polytope");
      rays.insert(rays.end(), c->rays().begin(), c->rays().end());
      lin.insert(lin.end(), c->lineality().begin(), c->lineality().end());
      (poly.is_open() ? any_open : any_closed) = true;
    }
  }
  if (any_open && any_closed)
    throw Error(ErrorKind::MixedTopology, "relative_hull of open and closed pieces is neither");
  auto cone = PolyhedralCone::from_generators(rays, within.ambient_dim(), lin);
  return {std::move(cone), any_open ? Topology::Open : Topology::Closed, within.side()};
}

inline bool is_irreducible(const ProjConvexPolytope& poly) {
  return poly.is_open() && poly.cone().is_fulldim() && poly.cone().facets().size() == 1;
}

inline ProjConvexPolytope irreducible_polytope(const IrreducibleConvex& c, Side side = Side::Primal) {
  const auto& f = c.excluded.functional();
  return {PolyhedralCone::from_facets({f}, f.size()), Topology::Open, side};
}

inline IrreducibleConvex as_irreducible(const ProjConvexPolytope& poly) {
  if (!is_irreducible(poly)) throw Error(ErrorKind::InvalidPolytope, "polytope is not a hyperplane complement");
  return {ProjHyperplane(poly.cone().facets().front())};
}

/// Disjoint open polytopes U ⊇ k and V ⊇ l.
///
/// Searches a lifting of l sharing a strict witness h with k (a common affine
/// chart), separates the two lifted cones strictly by a functional g, then
/// relaxes every facet f of each cone to f + eps * h. eps starts at half the
/// smallest chart-normalized slack |g(r)| / h(r) over the rays of both cones
/// and is halved until every ray of the relaxed cones keeps its strict side
/// of g and of h.
inline std::optional<std::pair<ProjConvexPolytope, ProjConvexPolytope>> separate(const ProjConvexPolytope& k,
                                                                                 const ProjConvexPolytope& l) {
  check_compatible(k, l, "separate");
  if (k.is_open() || l.is_open()) throw Error(ErrorKind::MixedTopology, "separate expects closed polytopes");
  if (!disjoint(k, l)) throw Error(ErrorKind::NotDisjoint, "separate expects disjoint polytopes");
  const std::size_t d = k.ambient_dim();

  for (int s : {1, -1}) {
    const PolyhedralCone a = k.cone();
    const PolyhedralCone b = s > 0 ? l.cone() : l.cone().negated();
    LinSystem chart_sys(d);
    for (const auto& r : a.rays()) chart_sys.add(r, Relation::GT);
    for (const auto& r : b.rays()) chart_sys.add(r, Relation::GT);
    auto h_opt = solve_feasibility(chart_sys);
    if (!h_opt) continue;
    const IntVec h = primitive(*h_opt);

    LinSystem sep_sys(d);
    for (const auto& r : a.rays()) sep_sys.add(r, Relation::GT);
    for (const auto& r : b.rays()) sep_sys.add(negated(r), Relation::GT);
    auto g_opt = solve_feasibility(sep_sys);
    if (!g_opt) continue;
    const IntVec g = primitive(*g_opt);

    std::optional<Rat> slack;
    for (const auto& r : a.rays()) {
      Rat v = Rat(dot(g, r), dot(h, r));
      if (!slack || v < *slack) slack = v;
    }
    for (const auto& r : b.rays()) {
      Rat v = Rat(-dot(g, r), dot(h, r));
      if (!slack || v < *slack) slack = v;
    }
    Rat eps = *slack / 2;

    auto fatten = [&](const PolyhedralCone& c, const Rat& e) {
      std::vector<IntVec> ineqs;
      auto relax = [&](const IntVec& f) {
        Vec v(d);
        for (std::size_t i = 0; i < d; ++i) v[i] = Rat(f[i]) + e * h[i];
        ineqs.push_back(primitive(v));
      };
      for (const auto& f : c.facets()) relax(f);
      for (const auto& q : c.equations()) {
        relax(q);
        relax(negated(q));
      }
      return PolyhedralCone::from_facets(ineqs, d);
    };
    auto strictly_on = [&](const PolyhedralCone& c, int side) {
      if (!c.is_fulldim() || !c.is_salient()) return false;
      for (const auto& r : c.rays())
        if (dot(h, r) <= 0 || side * dot(g, r) <= 0) return false;
      return true;
    };
    for (int iter = 0; iter < 256; ++iter) {
      PolyhedralCone u = fatten(a, eps);
      PolyhedralCone v = fatten(b, eps);
      if (strictly_on(u, 1) && strictly_on(v, -1)) {
        ProjConvexPolytope up(std::move(u), Topology::Open, k.side());
        ProjConvexPolytope vp(std::move(v), Topology::Open, k.side());
        if (!disjoint(up, vp) || !subset(k, up) || !subset(l, vp))
          throw Error(ErrorKind::VerificationFailure, "separate produced overlapping neighborhoods");
        return std::pair{std::move(up), std::move(vp)};
      }
      eps /= 2;
    }
    throw Error(ErrorKind::VerificationFailure, "separate could not fatten within the separating slab");
  }
  return std::nullopt;
}

}  // namespace projconv

#endif  // PROJCONV_CONVEXSET_HPP
