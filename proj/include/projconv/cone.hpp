#ifndef PROJCONV_CONE_HPP
#define PROJCONV_CONE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "projconv/kernel.hpp"

namespace projconv {

namespace detail {

struct RayLineality {
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;
};

inline IntVec scaled_difference(const Int& a, const IntVec& x, const Int& b, const IntVec& y) {
  IntVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] - b * y[i];
  return out;
}

inline void sort_unique(std::vector<IntVec>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// Double-description conversion of {x : eq . x = 0, ineq . x >= 0} into
/// extreme rays plus a lineality basis, in canonical form.
///
/// Constraints are inserted one at a time (equations first). While the
/// constraint is nonzero on the current lineality space the cone is cut by
/// pivoting a lineality vector; otherwise rays are split by sign and adjacent
/// (+, -) pairs are combined, with adjacency decided by the combinatorial
/// zero-set test on the processed constraints.
inline RayLineality double_description(const std::vector<IntVec>& ineqs, const std::vector<IntVec>& eqs,
                                       std::size_t dim) {
  std::vector<IntVec> lin;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVec e(dim, Int(0));
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<IntVec> rays;
  std::vector<IntVec> processed;

  auto zero_set = [&](const IntVec& r) {
    std::vector<std::size_t> z;
    for (std::size_t i = 0; i < processed.size(); ++i)
      if (dot(processed[i], r) == 0) z.push_back(i);
    return z;
  };

  auto insert = [&](const IntVec& c, bool is_eq) {
    check_dims(c.size(), dim, "double_description");
    if (is_zero(c)) return;
    auto hit = std::find_if(lin.begin(), lin.end(), [&](const IntVec& l) { return dot(c, l) != 0; });
    if (hit != lin.end()) {
      IntVec l = *hit;
      lin.erase(hit);
      Int cl = dot(c, l);
      if (cl < 0) {
        l = negated(l);
        cl = -cl;
      }
      for (auto& other : lin) other = primitive(scaled_difference(cl, other, dot(c, other), l));
      for (auto& r : rays) r = primitive(scaled_difference(cl, r, dot(c, r), l));
      if (!is_eq) rays.push_back(primitive(l));
      processed.push_back(c);
      return;
    }

    std::vector<IntVec> pos, zero, neg;
    std::vector<Int> pos_val, neg_val;
    for (const auto& r : rays) {
      const Int s = dot(c, r);
      if (s > 0) {
        pos.push_back(r);
        pos_val.push_back(s);
      } else if (s < 0) {
        neg.push_back(r);
        neg_val.push_back(s);
      } else {
        zero.push_back(r);
      }
    }
    std::vector<std::vector<std::size_t>> zs;
    zs.reserve(rays.size());
    for (const auto& r : rays) zs.push_back(zero_set(r));
    auto index_of = [&](const IntVec& r) {
      return static_cast<std::size_t>(std::find(rays.begin(), rays.end(), r) - rays.begin());
    };

    std::vector<IntVec> next = zero;
    if (!is_eq) next.insert(next.end(), pos.begin(), pos.end());
    for (std::size_t a = 0; a < pos.size(); ++a) {
      const std::size_t ia = index_of(pos[a]);
      for (std::size_t b = 0; b < neg.size(); ++b) {
        const std::size_t ib = index_of(neg[b]);
        std::vector<std::size_t> common;
        std::set_intersection(zs[ia].begin(), zs[ia].end(), zs[ib].begin(), zs[ib].end(),
                              std::back_inserter(common));
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == ia || k == ib) continue;
          if (std::includes(zs[k].begin(), zs[k].end(), common.begin(), common.end())) adjacent = false;
        }
        if (!adjacent) continue;
        next.push_back(primitive(scaled_difference(pos_val[a], neg[b], neg_val[b], pos[a])));
      }
    }
    rays = std::move(next);
    processed.push_back(c);
  };

  for (const auto& e : eqs) insert(e, true);
  for (const auto& f : ineqs) insert(f, false);

  RayLineality out;
  out.lineality = canonical_basis(lin, dim);
  for (const auto& r : rays) {
    Vec p = project_out(to_rat(r), out.lineality);
    if (!is_zero(p)) out.rays.push_back(primitive(p));
  }
  sort_unique(out.rays);
  return out;
}

}  // namespace detail

/// Closed polyhedral cone in R^d (d <= 4) kept in both descriptions.
///
/// V-description: extreme rays (taken in the orthogonal complement of the
/// lineality space) plus a lineality basis. H-description: irredundant facet
/// functionals (taken in the span of the cone) plus a basis of implicit
/// equations. Every list is primitive, sorted and canonical, so structural
/// equality is set equality.
class PolyhedralCone {
 public:
  PolyhedralCone() = default;

  static PolyhedralCone from_generators(const std::vector<IntVec>& rays, std::size_t dim,
                                        const std::vector<IntVec>& lineality = {}) {
    check_ambient(dim);
    auto h = detail::double_description(rays, lineality, dim);
    auto v = detail::double_description(h.rays, h.lineality, dim);
    return PolyhedralCone(dim, std::move(v), std::move(h));
  }

  static PolyhedralCone from_facets(const std::vector<IntVec>& facets, std::size_t dim,
                                    const std::vector<IntVec>& equations = {}) {
    check_ambient(dim);
    auto v = detail::double_description(facets, equations, dim);
    auto h = detail::double_description(v.rays, v.lineality, dim);
    return PolyhedralCone(dim, std::move(v), std::move(h));
  }

  static PolyhedralCone zero(std::size_t dim) { return from_generators({}, dim); }
  static PolyhedralCone whole(std::size_t dim) { return from_facets({}, dim); }

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<IntVec>& rays() const { return rays_; }
  const std::vector<IntVec>& lineality() const { return lineality_; }
  const std::vector<IntVec>& facets() const { return facets_; }
  const std::vector<IntVec>& equations() const { return equations_; }

  /// Rays plus both orientations of every lineality vector.
  std::vector<IntVec> generators() const {
    std::vector<IntVec> g = rays_;
    for (const auto& l : lineality_) {
      g.push_back(l);
      g.push_back(projconv::negated(l));
    }
    return g;
  }

  /// Facets plus both orientations of every equation.
  std::vector<IntVec> inequalities() const {
    std::vector<IntVec> h = facets_;
    for (const auto& e : equations_) {
      h.push_back(e);
      h.push_back(projconv::negated(e));
    }
    return h;
  }

  std::size_t dimension() const { return dim_ - equations_.size(); }
  bool is_salient() const { return lineality_.empty(); }
  bool is_fulldim() const { return equations_.empty(); }
  bool is_zero() const { return rays_.empty() && lineality_.empty(); }
  bool is_whole() const { return facets_.empty() && equations_.empty(); }

  template <class T>
  bool contains(const std::vector<T>& x) const {
    check_dims(x.size(), dim_, "PolyhedralCone::contains");
    for (const auto& e : equations_)
      if (dot(e, x) != 0) return false;
    for (const auto& f : facets_)
      if (dot(f, x) < 0) return false;
    return true;
  }

  template <class T>
  bool contains_interior(const std::vector<T>& x) const {
    check_dims(x.size(), dim_, "PolyhedralCone::contains_interior");
    if (!is_fulldim()) return false;
    for (const auto& f : facets_)
      if (dot(f, x) <= 0) return false;
    return true;
  }

  bool contains(const PolyhedralCone& other) const {
    check_dims(other.dim_, dim_, "PolyhedralCone::contains");
    for (const auto& g : other.generators())
      if (!contains(g)) return false;
    return true;
  }

  /// The cone -C.
  PolyhedralCone negated() const {
    PolyhedralCone c = *this;
    for (auto& r : c.rays_) r = projconv::negated(r);
    for (auto& f : c.facets_) f = projconv::negated(f);
    detail::sort_unique(c.rays_);
    detail::sort_unique(c.facets_);
    return c;
  }

  friend bool operator==(const PolyhedralCone&, const PolyhedralCone&) = default;

 private:
  PolyhedralCone(std::size_t dim, detail::RayLineality v, detail::RayLineality h)
      : dim_(dim),
        rays_(std::move(v.rays)),
        lineality_(std::move(v.lineality)),
        facets_(std::move(h.rays)),
        equations_(std::move(h.lineality)) {}

  static void check_ambient(std::size_t dim) {
    if (dim == 0 || dim > kMaxAmbientDim)
      throw Error(ErrorKind::DimensionMismatch, "cone ambient dimension must be in 1..4");
  }

  std::size_t dim_ = 0;
  std::vector<IntVec> rays_;
  std::vector<IntVec> lineality_;
  std::vector<IntVec> facets_;
  std::vector<IntVec> equations_;
};

/// {w : <w, g> >= 0 for every g in c}; a swap of the two descriptions.
inline PolyhedralCone dual_cone(const PolyhedralCone& c) {
  return PolyhedralCone::from_facets(c.rays(), c.ambient_dim(), c.lineality());
}

inline PolyhedralCone intersect(const PolyhedralCone& a, const PolyhedralCone& b) {
  check_dims(a.ambient_dim(), b.ambient_dim(), "intersect");
  auto f = a.facets();
  f.insert(f.end(), b.facets().begin(), b.facets().end());
  auto e = a.equations();
  e.insert(e.end(), b.equations().begin(), b.equations().end());
  return PolyhedralCone::from_facets(f, a.ambient_dim(), e);
}

inline PolyhedralCone conic_hull(const PolyhedralCone& a, const PolyhedralCone& b) {
  check_dims(a.ambient_dim(), b.ambient_dim(), "conic_hull");
  auto r = a.rays();
  r.insert(r.end(), b.rays().begin(), b.rays().end());
  auto l = a.lineality();
  l.insert(l.end(), b.lineality().begin(), b.lineality().end());
  return PolyhedralCone::from_generators(r, a.ambient_dim(), l);
}

inline bool is_salient(const PolyhedralCone& c) { return c.is_salient(); }
inline bool is_fulldim(const PolyhedralCone& c) { return c.is_fulldim(); }
inline bool is_zero(const PolyhedralCone& c) { return c.is_zero(); }

/// Sum of the extreme rays (or e1 for the whole space), verified to be
/// strictly inside every facet; nullopt when c has empty interior.
inline std::optional<IntVec> interior_point(const PolyhedralCone& c) {
  if (!c.is_fulldim()) return std::nullopt;
  IntVec x(c.ambient_dim(), Int(0));
  if (c.rays().empty()) {
    x[0] = 1;
    return x;
  }
  for (const auto& r : c.rays()) x = added(x, r);
  if (!c.contains_interior(x))
    throw Error(ErrorKind::VerificationFailure, "ray sum is not an interior point");
  return x;
}

}  // namespace projconv

#endif  // PROJCONV_CONE_HPP
