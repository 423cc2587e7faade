#ifndef PROJCONV_PROJECTIVE_HPP
#define PROJCONV_PROJECTIVE_HPP

#include <cstddef>
#include <string>
#include <utility>

#include "projconv/kernel.hpp"

namespace projconv {

/// Point of P^n, stored as its canonical primitive homogeneous vector.
class ProjPoint {
 public:
  ProjPoint() = default;
  template <class T>
  explicit ProjPoint(const std::vector<T>& v) : coords_(normalize_primitive(v)) {
    if (coords_.size() < 2 || coords_.size() > kMaxAmbientDim)
      throw Error(ErrorKind::DimensionMismatch, "projective points need 2..4 coordinates");
  }
  ProjPoint(std::initializer_list<long> v) : ProjPoint(IntVec(v.begin(), v.end())) {}

  const IntVec& coords() const { return coords_; }
  std::size_t ambient_dim() const { return coords_.size(); }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.coords_ < b.coords_; }

 private:
  IntVec coords_;
};

/// Hyperplane of P^n given by its functional; equivalently a point of the dual space.
class ProjHyperplane {
 public:
  ProjHyperplane() = default;
  template <class T>
  explicit ProjHyperplane(const std::vector<T>& f) : functional_(normalize_primitive(f)) {
    if (functional_.size() < 2 || functional_.size() > kMaxAmbientDim)
      throw Error(ErrorKind::DimensionMismatch, "hyperplanes need 2..4 coordinates");
  }
  ProjHyperplane(std::initializer_list<long> v) : ProjHyperplane(IntVec(v.begin(), v.end())) {}

  const IntVec& functional() const { return functional_; }
  std::size_t ambient_dim() const { return functional_.size(); }

  /// The same functional read as a point of the dual space.
  ProjPoint as_point() const { return ProjPoint(functional_); }

  friend bool operator==(const ProjHyperplane&, const ProjHyperplane&) = default;
  friend bool operator<(const ProjHyperplane& a, const ProjHyperplane& b) {
    return a.functional_ < b.functional_;
  }

 private:
  IntVec functional_;
};

inline ProjHyperplane as_hyperplane(const ProjPoint& p) { return ProjHyperplane(p.coords()); }

/// "[a, b, c]"
inline std::string format_coords(const IntVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + "]";
}

inline std::string to_string(const ProjPoint& p) { return format_coords(p.coords()); }
inline std::string to_string(const ProjHyperplane& h) { return format_coords(h.functional()); }

/// Parses "[a, b, c]" into an integer vector (no canonicalization).
inline IntVec parse_coords(std::string_view text) {
  std::string s(text);
  auto l = s.find('['), r = s.rfind(']');
  if (l == std::string::npos || r == std::string::npos || r < l)
    throw Error(ErrorKind::Parse, "expected '[a, b, ...]', got '" + s + "'");
  IntVec out;
  std::string body = s.substr(l + 1, r - l - 1);
  std::size_t start = 0;
  while (start <= body.size()) {
    auto comma = body.find(',', start);
    std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    Rat v = parse_rational(tok);
    if (boost::multiprecision::denominator(v) != 1)
      throw Error(ErrorKind::Parse, "coordinates must be integers: '" + tok + "'");
    out.push_back(boost::multiprecision::numerator(v));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

inline bool incident(const ProjPoint& p, const ProjHyperplane& h) {
  check_dims(p.ambient_dim(), h.ambient_dim(), "incident");
  return dot(h.functional(), p.coords()) == 0;
}

// ---------------------------------------------------------------------------
// Segments.

enum class SegmentSign { NonNegative, NonPositive };

/// {pi(lambda u + mu v) : lambda * mu >= 0 (or <= 0), (lambda, mu) != 0}.
/// The chosen representatives u, v are part of the segment's identity.
struct Segment {
  IntVec u;
  IntVec v;
  SegmentSign sign = SegmentSign::NonNegative;

  friend bool operator==(const Segment&, const Segment&) = default;

  /// A point strictly inside the segment (lambda = mu = 1 up to sign).
  ProjPoint midpoint() const {
    return ProjPoint(sign == SegmentSign::NonNegative ? added(u, v) : added(u, negated(v)));
  }
};

/// Coefficients (lambda, mu) with r = lambda u + mu v, if r lies on span(u, v).
inline std::optional<std::pair<Rat, Rat>> line_coefficients(const IntVec& u, const IntVec& v,
                                                            const IntVec& r) {
  check_dims(u.size(), r.size(), "line_coefficients");
  check_dims(v.size(), r.size(), "line_coefficients");
  // Pick the 2x2 minor of [u v] with nonzero determinant.
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      const Int det = u[i] * v[j] - u[j] * v[i];
      if (det == 0) continue;
      const Rat lambda = Rat(r[i] * v[j] - r[j] * v[i], det);
      const Rat mu = Rat(u[i] * r[j] - u[j] * r[i], det);
      for (std::size_t k = 0; k < r.size(); ++k)
        if (lambda * u[k] + mu * v[k] != r[k]) return std::nullopt;
      return std::pair{lambda, mu};
    }
  }
  throw Error(ErrorKind::EqualPoints, "segment endpoints are linearly dependent");
}

inline bool segment_contains(const Segment& s, const ProjPoint& r) {
  auto c = line_coefficients(s.u, s.v, r.coords());
  if (!c) return false;
  const int prod = sign(c->first) * sign(c->second);
  return s.sign == SegmentSign::NonNegative ? prod >= 0 : prod <= 0;
}

/// The two segments joining p and q, built from their canonical representatives.
inline std::pair<Segment, Segment> segments(const ProjPoint& p, const ProjPoint& q) {
  check_dims(p.ambient_dim(), q.ambient_dim(), "segments");
  if (p == q) throw Error(ErrorKind::EqualPoints, "segments need distinct points");
  return {Segment{p.coords(), q.coords(), SegmentSign::NonNegative},
          Segment{p.coords(), q.coords(), SegmentSign::NonPositive}};
}

/// Set-level equality of segments (independent of the chosen representatives).
inline bool same_segment(const Segment& a, const Segment& b) {
  const ProjPoint a0(a.u), a1(a.v), b0(b.u), b1(b.v);
  const bool same_ends = (a0 == b0 && a1 == b1) || (a0 == b1 && a1 == b0);
  return same_ends && segment_contains(b, a.midpoint());
}

// ---------------------------------------------------------------------------
// Irreducible convex sets and the point correspondence.

/// P \ excluded, the complement of a hyperplane.
struct IrreducibleConvex {
  ProjHyperplane excluded;

  friend bool operator==(const IrreducibleConvex&, const IrreducibleConvex&) = default;
};

inline bool contains(const IrreducibleConvex& c, const ProjPoint& p) { return !incident(p, c.excluded); }

// The standard basis identifies V** with V, so the correspondence is a
// transposition of coordinates: the point p becomes the dual hyperplane with
// functional p, and back.
inline IrreducibleConvex delta(const ProjPoint& p) { return {ProjHyperplane(p.coords())}; }
inline ProjPoint delta_inv(const IrreducibleConvex& c) { return ProjPoint(c.excluded.functional()); }

}  // namespace projconv

#endif  // PROJCONV_PROJECTIVE_HPP
