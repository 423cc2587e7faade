#ifndef PROJCONV_SCENE_HPP
#define PROJCONV_SCENE_HPP

#include <string>
#include <vector>

#include "projconv/duality.hpp"
#include "projconv/oracle.hpp"

namespace projconv {

struct Polygon {
  std::string name;
  std::vector<AffinePoint> vertices;

  friend bool operator==(const Polygon&, const Polygon&) = default;
};

/// Affine polygons in the plane x0 = 1 of P^2.
struct Scene {
  std::vector<Polygon> polygons;

  friend bool operator==(const Scene&, const Scene&) = default;
};

inline Rat cross(const AffinePoint& o, const AffinePoint& a, const AffinePoint& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

/// At least 3 vertices, strictly convex, counterclockwise.
inline void validate_polygon(const Polygon& poly) {
  const auto& v = poly.vertices;
  if (v.size() < 3) throw Error(ErrorKind::DegeneratePolygon, "polygon '" + poly.name + "' needs 3 vertices");
  bool flat = true;
  for (std::size_t i = 1; i < v.size() && flat; ++i)
    for (std::size_t j = i + 1; j < v.size() && flat; ++j)
      if (cross(v[0], v[i], v[j]) != 0) flat = false;
  if (flat) throw Error(ErrorKind::CollinearVertices, "polygon '" + poly.name + "' is collinear");
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i)
    if (cross(v[i], v[(i + 1) % n], v[(i + 2) % n]) <= 0)
      throw Error(ErrorKind::DegeneratePolygon,
                  "polygon '" + poly.name + "' is not strictly convex and counterclockwise");
  // Local left turns can still wind twice; the fan from the first vertex
  // must turn left too.
  for (std::size_t i = 1; i + 1 < n; ++i)
    if (cross(v[0], v[i], v[i + 1]) <= 0)
      throw Error(ErrorKind::DegeneratePolygon, "polygon '" + poly.name + "' winds more than once");
}

inline void validate_scene(const Scene& s) {
  if (s.polygons.empty()) throw Error(ErrorKind::EmptySet, "scene has no polygons");
  for (const auto& p : s.polygons) validate_polygon(p);
}

/// Closed primal polytope generated by (1, x, y) per vertex (scaled to integers).
inline ProjConvexPolytope embed_polygon(const std::vector<AffinePoint>& vertices) {
  if (vertices.size() < 3) throw Error(ErrorKind::CollinearVertices, "need at least 3 vertices");
  std::vector<IntVec> gens;
  for (const auto& [x, y] : vertices) gens.push_back(primitive(Vec{Rat(1), x, y}));
  if (rank(gens) < 3) throw Error(ErrorKind::CollinearVertices, "polygon vertices are collinear");
  return ProjConvexPolytope::from_generators(gens, Topology::Closed, Side::Primal);
}

struct AvoidanceResult {
  MultiConvexSet dual_cells;
  std::vector<ProjHyperplane> representatives;
  std::size_t degree = 0;
};

/// All lines of P^2 missing every polygon, as the open cells of
/// ∩ Φ(polygon) in the dual plane, with one oracle-checked line per cell.
inline AvoidanceResult avoiding_lines(const Scene& scene) {
  validate_scene(scene);
  std::vector<ProjConvexPolytope> images;
  for (const auto& p : scene.polygons) images.push_back(phi_polytope(embed_polygon(p.vertices)));
  AvoidanceResult out;
  out.dual_cells = decompose(images);
  if (out.dual_cells.empty())
    throw Error(ErrorKind::NoAvoidingLines, "no line avoids every polygon");
  for (const auto& cell : out.dual_cells.cells()) {
    auto w = interior_point(cell.polytope.cone());
    if (!w) throw Error(ErrorKind::VerificationFailure, "open cell without interior point");
    ProjHyperplane h(*w);
    for (const auto& p : scene.polygons)
      if (!avoidance_oracle(p.vertices, h))
        throw Error(ErrorKind::VerificationFailure,
                    "line " + to_string(h) + " does not avoid polygon '" + p.name + "'");
    out.representatives.push_back(h);
  }
  out.degree = out.dual_cells.cells().size();
  return out;
}

/// Kernel classification of a line against the scene's dual cells.
inline bool avoids_scene(const AvoidanceResult& r, const ProjHyperplane& h) {
  return membership(r.dual_cells, h.as_point());
}

}  // namespace projconv

#endif  // PROJCONV_SCENE_HPP
