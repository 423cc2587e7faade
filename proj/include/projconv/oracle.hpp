#ifndef PROJCONV_ORACLE_HPP
#define PROJCONV_ORACLE_HPP

// Brute-force checkers. Only scalar products and sign tests; nothing here
// calls the double-description or LP code.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <utility>
#include <vector>

#include "projconv/convexset.hpp"

namespace projconv {

/// Deterministic finite sample of P^(d-1).
///
/// Chart: the affine chart x0 = 1 sampled on an n x n (x ...) lattice over
/// [-W, W]; points are homogenized with denominator n - 1 so every sample is
/// an integer vector. Directions: every integer vector in [-R, R]^d whose
/// first nonzero entry is positive, in lexicographic order.
struct SampleGrid {
  enum class Scope { Chart, Directions };

  Scope scope = Scope::Chart;
  int resolution = 41;
  long long half_width = 8;
  std::size_t dim = 3;

  static SampleGrid chart(int resolution, long long half_width = 8, std::size_t dim = 3) {
    if (resolution < 2) throw Error(ErrorKind::DimensionMismatch, "chart grid needs resolution >= 2");
    return {Scope::Chart, resolution, half_width, dim};
  }
  static SampleGrid directions(int radius, std::size_t dim = 3) {
    if (radius < 1) throw Error(ErrorKind::DimensionMismatch, "direction grid needs radius >= 1");
    return {Scope::Directions, radius, 0, dim};
  }

  /// Calls f(const std::vector<long long>&) for every sample, in order.
  template <class F>
  void for_each(F&& f) const {
    if (dim < 2 || dim > kMaxAmbientDim) throw Error(ErrorKind::DimensionMismatch, "grid dimension must be 2..4");
    std::vector<long long> x(dim);
    if (scope == Scope::Chart) {
      const long long den = resolution - 1;
      x[0] = den;
      std::vector<int> idx(dim - 1, 0);
      for (;;) {
        for (std::size_t i = 1; i < dim; ++i) x[i] = -half_width * den + 2 * half_width * idx[i - 1];
        f(static_cast<const std::vector<long long>&>(x));
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == resolution) idx[k++] = 0;
        if (k == idx.size()) return;
      }
    }
    const long long r = resolution;
    std::fill(x.begin(), x.end(), -r);
    for (;;) {
      auto lead = std::find_if(x.begin(), x.end(), [](long long v) { return v != 0; });
      if (lead != x.end() && *lead > 0) f(static_cast<const std::vector<long long>&>(x));
      std::size_t k = dim;
      while (k > 0 && x[k - 1] == r) x[--k] = -r;
      if (k == 0) return;
      ++x[k - 1];
    }
  }

  std::vector<ProjPoint> points() const {
    std::set<ProjPoint> out;
    for_each([&](const std::vector<long long>& v) { out.insert(ProjPoint(IntVec(v.begin(), v.end()))); });
    return {out.begin(), out.end()};
  }
};

namespace oracle_detail {

/// Determinant by cofactor expansion (matrices here are at most 3 x 3).
inline Int det(const std::vector<IntVec>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<IntVec> minor;
    for (std::size_t r = 1; r < n; ++r) {
      IntVec row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(std::move(row));
    }
    Int term = m[0][c] * det(minor);
    total += (c % 2 == 0) ? term : Int(-term);
  }
  return total;
}

/// Generalized cross product of d - 1 vectors in R^d.
inline IntVec normal_of(const std::vector<IntVec>& vs, std::size_t d) {
  IntVec n(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<IntVec> m;
    for (const auto& v : vs) {
      IntVec row;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) row.push_back(v[j]);
      m.push_back(std::move(row));
    }
    Int c = det(m);
    n[i] = (i % 2 == 0) ? c : Int(-c);
  }
  return n;
}

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline bool independent(const std::vector<IntVec>& vs, std::size_t d) {
  const std::size_t k = vs.size();
  if (k == 0) return true;
  if (k > d) return false;
  bool found = false;
  for_each_subset(d, k, [&](const std::vector<std::size_t>& cols) {
    if (found) return;
    std::vector<IntVec> m;
    for (const auto& v : vs) {
      IntVec row;
      for (auto c : cols) row.push_back(v[c]);
      m.push_back(std::move(row));
    }
    if (det(m) != 0) found = true;
  });
  return found;
}

inline Int sdot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace oracle_detail

/// Half-space description recomputed from generators alone.
struct OracleHalfspaces {
  std::size_t dim = 0;
  std::vector<IntVec> equations;
  std::vector<IntVec> inequalities;  // valid, possibly redundant
};

/// Every cofactor normal of a (d-1)-subset that is orthogonal to all
/// generators is an equation; with those equations added to the pool, every
/// normal that keeps all generators on one side is a valid inequality. The
/// true facets are among them.
inline OracleHalfspaces brute_force_halfspaces(const std::vector<IntVec>& gens, std::size_t d) {
  using namespace oracle_detail;
  OracleHalfspaces out;
  out.dim = d;
  std::vector<IntVec> pool = gens;
  for (std::size_t i = 0; i < d; ++i) {
    IntVec e(d, Int(0));
    e[i] = 1;
    pool.push_back(e);
  }
  std::set<IntVec> eqs;
  for_each_subset(pool.size(), d - 1, [&](const std::vector<std::size_t>& s) {
    std::vector<IntVec> vs;
    for (auto i : s) vs.push_back(pool[i]);
    IntVec n = normal_of(vs, d);
    if (std::all_of(n.begin(), n.end(), [](const Int& v) { return v == 0; })) return;
    for (const auto& g : gens)
      if (sdot(n, g) != 0) return;
    eqs.insert(n);
  });
  out.equations.assign(eqs.begin(), eqs.end());

  pool = gens;
  pool.insert(pool.end(), out.equations.begin(), out.equations.end());
  std::set<IntVec> ineqs;
  for_each_subset(pool.size(), d - 1, [&](const std::vector<std::size_t>& s) {
    std::vector<IntVec> vs;
    for (auto i : s) vs.push_back(pool[i]);
    IntVec n = normal_of(vs, d);
    if (std::all_of(n.begin(), n.end(), [](const Int& v) { return v == 0; })) return;
    int side = 0;
    bool touches_all = true;
    for (const auto& g : gens) {
      const Int v = sdot(n, g);
      if (v == 0) continue;
      touches_all = false;
      const int sg = v > 0 ? 1 : -1;
      if (side == 0) side = sg;
      if (sg != side) return;
    }
    if (touches_all) return;
    if (side < 0)
      for (auto& x : n) x = -x;
    ineqs.insert(n);
  });
  out.inequalities.assign(ineqs.begin(), ineqs.end());
  return out;
}

inline OracleHalfspaces brute_force_halfspaces(const ProjConvexPolytope& poly) {
  return brute_force_halfspaces(poly.cone().generators(), poly.ambient_dim());
}

/// Sign test of x (one representative) against the recomputed half-spaces.
inline bool oracle_lifted_contains(const OracleHalfspaces& hs, const IntVec& x, bool open) {
  using oracle_detail::sdot;
  if (std::all_of(x.begin(), x.end(), [](const Int& v) { return v == 0; })) return false;
  for (const auto& e : hs.equations)
    if (sdot(e, x) != 0) return false;
  for (const auto& f : hs.inequalities) {
    const Int v = sdot(f, x);
    if (open ? v <= 0 : v < 0) return false;
  }
  return true;
}

inline bool oracle_contains(const OracleHalfspaces& hs, const IntVec& x, bool open) {
  IntVec m(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) m[i] = -x[i];
  return oracle_lifted_contains(hs, x, open) || oracle_lifted_contains(hs, m, open);
}

inline bool membership_oracle(const ProjConvexPolytope& poly, const ProjPoint& p) {
  check_dims(poly.ambient_dim(), p.ambient_dim(), "membership_oracle");
  return oracle_contains(brute_force_halfspaces(poly), p.coords(), poly.is_open());
}

/// The grid points lying in the polytope, sorted.
inline std::vector<ProjPoint> membership_oracle(const ProjConvexPolytope& poly, const SampleGrid& grid) {
  check_dims(poly.ambient_dim(), grid.dim, "membership_oracle");
  const OracleHalfspaces hs = brute_force_halfspaces(poly);
  std::set<ProjPoint> out;
  grid.for_each([&](const std::vector<long long>& v) {
    IntVec x(v.begin(), v.end());
    if (oracle_contains(hs, x, poly.is_open())) out.insert(ProjPoint(x));
  });
  return {out.begin(), out.end()};
}

using AffinePoint = std::pair<Rat, Rat>;

/// True iff the line h0 + h1 x + h2 y = 0 misses the closed convex polygon:
/// every vertex value has the same strict sign.
inline bool avoidance_oracle(const std::vector<AffinePoint>& vertices, const ProjHyperplane& h) {
  if (h.ambient_dim() != 3) throw Error(ErrorKind::DimensionMismatch, "avoidance_oracle works in the projective plane");
  if (vertices.size() < 3) throw Error(ErrorKind::DegeneratePolygon, "polygon needs at least 3 vertices");
  bool flat = true;
  const auto& a = vertices[0];
  for (std::size_t i = 1; i < vertices.size() && flat; ++i)
    for (std::size_t j = i + 1; j < vertices.size() && flat; ++j) {
      const auto& b = vertices[i];
      const auto& c = vertices[j];
      if ((b.first - a.first) * (c.second - a.second) - (b.second - a.second) * (c.first - a.first) != 0)
        flat = false;
    }
  if (flat) throw Error(ErrorKind::DegeneratePolygon, "polygon vertices are collinear");
  const auto& f = h.functional();
  int side = 0;
  for (const auto& [x, y] : vertices) {
    const Rat v = Rat(f[0]) + Rat(f[1]) * x + Rat(f[2]) * y;
    if (v == 0) return false;
    const int s = v > 0 ? 1 : -1;
    if (side == 0) side = s;
    if (s != side) return false;
  }
  return true;
}

/// Every subset of at most d hyperplanes is linearly independent.
inline bool in_general_position(const std::vector<ProjHyperplane>& hs) {
  if (hs.empty()) return true;
  const std::size_t d = hs.front().ambient_dim();
  for (const auto& h : hs) check_dims(h.ambient_dim(), d, "in_general_position");
  for (std::size_t k = 2; k <= std::min(d, hs.size()); ++k) {
    bool ok = true;
    oracle_detail::for_each_subset(hs.size(), k, [&](const std::vector<std::size_t>& s) {
      if (!ok) return;
      std::vector<IntVec> vs;
      for (auto i : s) vs.push_back(hs[i].functional());
      if (!oracle_detail::independent(vs, d)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

/// Number of distinct strict sign vectors (modulo a global flip) realized on
/// the grid by the complement of the hyperplanes.
inline std::size_t cell_count_oracle(const std::vector<ProjHyperplane>& hs, const SampleGrid& grid) {
  if (hs.empty()) throw Error(ErrorKind::EmptySet, "cell_count_oracle needs at least one hyperplane");
  if (hs.size() > 63) throw Error(ErrorKind::NotGeneric, "too many hyperplanes for a sign bitmask");
  if (!in_general_position(hs)) throw Error(ErrorKind::NotGeneric, "hyperplanes are not in general position");
  const std::size_t d = hs.front().ambient_dim();
  check_dims(grid.dim, d, "cell_count_oracle");

  // Grid coordinates are bounded by |extent|, so int64 dot products are safe
  // whenever coefficient * extent * d fits.
  const long long extent = grid.scope == SampleGrid::Scope::Chart
                               ? std::max<long long>(grid.resolution, 2 * grid.half_width * grid.resolution)
                               : grid.resolution;
  const Int limit = Int(std::numeric_limits<long long>::max() / 8) / (Int(extent) * Int(d));
  std::vector<std::vector<long long>> f;
  for (const auto& h : hs) {
    std::vector<long long> row;
    for (const auto& c : h.functional()) {
      if (abs(c) > limit) throw Error(ErrorKind::NotGeneric, "hyperplane coefficients too large for the oracle");
      row.push_back(static_cast<long long>(c));
    }
    f.push_back(std::move(row));
  }
  std::set<std::uint64_t> seen;
  grid.for_each([&](const std::vector<long long>& x) {
    std::uint64_t mask = 0;
    int first = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      long long v = 0;
      for (std::size_t j = 0; j < d; ++j) v += f[i][j] * x[j];
      if (v == 0) return;
      const int s = v > 0 ? 1 : -1;
      if (i == 0) first = s;
      if (s * first > 0) mask |= (std::uint64_t{1} << i);
    }
    seen.insert(mask);
  });
  return seen.size();
}

}  // namespace projconv

#endif  // PROJCONV_ORACLE_HPP
