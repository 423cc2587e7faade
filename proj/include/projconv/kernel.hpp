#ifndef PROJCONV_KERNEL_HPP
#define PROJCONV_KERNEL_HPP

// Exact rational linear algebra for ambient dimensions up to 4.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "projconv/error.hpp"

namespace projconv {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using Vec = std::vector<Rat>;
using IntVec = std::vector<Int>;
using Mat = std::vector<Vec>;

inline constexpr std::size_t kMaxAmbientDim = 4;

// ---------------------------------------------------------------------------
// Rational text form: "p/q" or "n".

inline Rat parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return c == ' '; }), s.end());
  auto valid_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                       [](unsigned char c) { return c >= '0' && c <= '9'; });
  };
  auto to_int = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return Int(t);
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw Error(ErrorKind::Parse, "bad rational literal '" + std::string(text) + "'");
    return Rat(to_int(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw Error(ErrorKind::Parse, "bad rational literal '" + std::string(text) + "'");
  Int d = to_int(den);
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  return Rat(to_int(num), d);
}

inline std::string to_string(const Rat& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

// ---------------------------------------------------------------------------
// Vector helpers.

inline Vec to_rat(const IntVec& v) { return Vec(v.begin(), v.end()); }

inline void check_dims(std::size_t a, std::size_t b, const char* where) {
  if (a != b)
    throw Error(ErrorKind::DimensionMismatch,
                std::string(where) + ": " + std::to_string(a) + " vs " + std::to_string(b));
}

template <class A, class B>
auto dot(const std::vector<A>& a, const std::vector<B>& b) {
  check_dims(a.size(), b.size(), "dot");
  using R = std::conditional_t<std::is_same_v<A, Int> && std::is_same_v<B, Int>, Int, Rat>;
  R s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T>
bool is_zero(const std::vector<T>& v) {
  return std::all_of(v.begin(), v.end(), [](const T& x) { return x == 0; });
}

template <class T>
std::vector<T> negated(std::vector<T> v) {
  for (auto& x : v) x = -x;
  return v;
}

template <class T>
std::vector<T> added(std::vector<T> a, const std::vector<T>& b) {
  check_dims(a.size(), b.size(), "add");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline int sign(const Int& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
inline int sign(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

/// Integer vector parallel to v with the same orientation and gcd 1.
inline IntVec primitive(const Vec& v) {
  if (is_zero(v)) throw Error(ErrorKind::ZeroVector, "cannot take primitive of zero vector");
  Int l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, Int(boost::multiprecision::denominator(x)));
  IntVec w(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    w[i] = boost::multiprecision::numerator(v[i]) * (l / boost::multiprecision::denominator(v[i]));
    g = boost::multiprecision::gcd(g, w[i]);
  }
  if (g < 0) g = -g;
  for (auto& x : w) x /= g;
  return w;
}

inline IntVec primitive(const IntVec& v) {
  if (is_zero(v)) throw Error(ErrorKind::ZeroVector, "cannot take primitive of zero vector");
  Int g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  if (g < 0) g = -g;
  IntVec w = v;
  for (auto& x : w) x /= g;
  return w;
}

/// Canonical representative of the projective class of v: primitive, first
/// nonzero entry positive.
template <class T>
IntVec normalize_primitive(const std::vector<T>& v) {
  IntVec w = primitive(v);
  auto it = std::find_if(w.begin(), w.end(), [](const Int& x) { return x != 0; });
  if (*it < 0)
    for (auto& x : w) x = -x;
  return w;
}

// ---------------------------------------------------------------------------
// Matrix algorithms.

/// Exact rank by fraction-free (Bareiss) elimination.
inline std::size_t rank(const Mat& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::vector<IntVec> a;
  a.reserve(m.size());
  for (const auto& row : m) {
    check_dims(row.size(), cols, "rank");
    if (is_zero(row)) continue;
    a.push_back(primitive(row));
  }
  const std::size_t rows = a.size();
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

inline std::size_t rank(const std::vector<IntVec>& m) {
  Mat q;
  q.reserve(m.size());
  for (const auto& r : m) q.push_back(to_rat(r));
  return rank(q);
}

/// Reduced row echelon form; returns the nonzero rows.
inline Mat rref(Mat a) {
  if (a.empty()) return a;
  const std::size_t cols = a.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const Rat lead = a[r][c];
    for (auto& x : a[r]) x /= lead;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

/// Canonical basis of the row space: RREF rows scaled to primitive integers.
inline std::vector<IntVec> canonical_basis(const std::vector<IntVec>& rows, std::size_t dim) {
  Mat a;
  for (const auto& r : rows) {
    check_dims(r.size(), dim, "canonical_basis");
    a.push_back(to_rat(r));
  }
  std::vector<IntVec> out;
  for (const auto& r : rref(std::move(a))) out.push_back(primitive(r));
  return out;
}

/// Basis of {x : row . x = 0 for all rows}, canonicalized.
inline std::vector<IntVec> nullspace(const std::vector<IntVec>& rows, std::size_t dim) {
  Mat a;
  for (const auto& r : rows) {
    check_dims(r.size(), dim, "nullspace");
    a.push_back(to_rat(r));
  }
  a = rref(std::move(a));
  std::vector<std::size_t> pivot_col;
  for (const auto& row : a) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    pivot_col.push_back(c);
  }
  std::vector<IntVec> basis;
  for (std::size_t f = 0; f < dim; ++f) {
    if (std::find(pivot_col.begin(), pivot_col.end(), f) != pivot_col.end()) continue;
    Vec v(dim, Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < a.size(); ++i) v[pivot_col[i]] = -a[i][f];
    basis.push_back(primitive(v));
  }
  return canonical_basis(basis, dim);
}

/// Solves the square system m x = b; nullopt if m is singular.
inline std::optional<Vec> solve_square(Mat m, Vec b) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) m[i].push_back(b[i]);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rat f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

/// Orthogonal projection of v onto the complement of span(basis).
inline Vec project_out(const Vec& v, const std::vector<IntVec>& basis) {
  if (basis.empty()) return v;
  const std::size_t k = basis.size();
  Mat gram(k, Vec(k));
  Vec rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = Rat(dot(basis[i], basis[j]));
    rhs[i] = dot(to_rat(basis[i]), v);
  }
  auto coef = solve_square(gram, rhs);
  Vec out = v;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[j] -= (*coef)[i] * basis[i][j];
  return out;
}

// ---------------------------------------------------------------------------
// Homogeneous feasibility.

enum class Relation { EQ, GE, GT };

struct LinRow {
  Vec functional;
  Relation relation;
};

struct LinSystem {
  std::size_t dim = 0;
  std::vector<LinRow> rows;

  LinSystem() = default;
  explicit LinSystem(std::size_t d) : dim(d) {}

  template <class T>
  LinSystem& add(const std::vector<T>& f, Relation rel) {
    check_dims(f.size(), dim, "LinSystem::add");
    rows.push_back({Vec(f.begin(), f.end()), rel});
    return *this;
  }
};

inline bool satisfies(const LinSystem& sys, const Vec& x) {
  for (const auto& row : sys.rows) {
    const Rat v = dot(row.functional, x);
    switch (row.relation) {
      case Relation::EQ: if (v != 0) return false; break;
      case Relation::GE: if (v < 0) return false; break;
      case Relation::GT: if (v <= 0) return false; break;
    }
  }
  return true;
}

/// Finds x with every EQ row = 0, GE row >= 0 and GT row > 0, or nullopt.
///
/// Strict rows are homogenized to "row . x >= 1", which is equivalent for a
/// cone. The remaining system is solved by a phase-one simplex over the split
/// x = x+ - x- with Bland's rule, so the output is a deterministic function of
/// the input rows.
inline std::optional<Vec> solve_feasibility(const LinSystem& sys) {
  const std::size_t n = sys.dim;
  if (n == 0 || n > kMaxAmbientDim)
    throw Error(ErrorKind::DimensionMismatch, "ambient dimension must be in 1..4");
  for (const auto& row : sys.rows) check_dims(row.functional.size(), n, "solve_feasibility");

  const bool any_strict = std::any_of(sys.rows.begin(), sys.rows.end(),
                                      [](const LinRow& r) { return r.relation == Relation::GT; });
  if (!any_strict) return Vec(n, Rat(0));

  const std::size_t m = sys.rows.size();
  std::size_t n_slack = 0;
  for (const auto& row : sys.rows) n_slack += row.relation != Relation::EQ;
  const std::size_t n_struct = 2 * n + n_slack;
  const std::size_t cols = n_struct + m;  // + artificials
  const std::size_t rhs = cols;

  Mat t(m, Vec(cols + 1, Rat(0)));
  std::vector<std::size_t> basis(m);
  std::size_t slack = 2 * n;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = sys.rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      t[i][j] = row.functional[j];
      t[i][n + j] = -row.functional[j];
    }
    if (row.relation != Relation::EQ) t[i][slack++] = -1;
    t[i][rhs] = row.relation == Relation::GT ? 1 : 0;
    t[i][n_struct + i] = 1;
    basis[i] = n_struct + i;
  }
  Vec obj(cols + 1, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n_struct; ++j) obj[j] -= t[i][j];
  for (std::size_t i = 0; i < m; ++i) obj[rhs] -= t[i][rhs];

  auto pivot = [&](std::size_t pr, std::size_t pc) {
    const Rat p = t[pr][pc];
    for (auto& x : t[pr]) x /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == pr || t[i][pc] == 0) continue;
      const Rat f = t[i][pc];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[pr][j];
    }
    if (obj[pc] != 0) {
      const Rat f = obj[pc];
      for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * t[pr][j];
    }
    basis[pr] = pc;
  };

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rat ratio = t[i][rhs] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase one
    pivot(leave, enter);
  }
  if (obj[rhs] != 0) return std::nullopt;

  Vec y(cols, Rat(0));
  for (std::size_t i = 0; i < m; ++i) y[basis[i]] = t[i][rhs];
  Vec x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = y[j] - y[n + j];
  if (!satisfies(sys, x))
    throw Error(ErrorKind::VerificationFailure, "simplex witness failed re-substitution");
  return x;
}

}  // namespace projconv

#endif  // PROJCONV_KERNEL_HPP
