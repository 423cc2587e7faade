#ifndef PROJCONV_IO_HPP
#define PROJCONV_IO_HPP

#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "projconv/scene.hpp"

namespace projconv {

using Json = nlohmann::json;

// Integers go out as JSON numbers while they fit in 64 bits and as decimal
// strings beyond that; rationals always go out as "p/q" or "n".

inline Json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

inline Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    Rat r = parse_rational(j.get<std::string>());
    if (boost::multiprecision::denominator(r) != 1)
      throw Error(ErrorKind::Parse, "expected an integer, got '" + j.get<std::string>() + "'");
    return boost::multiprecision::numerator(r);
  }
  throw Error(ErrorKind::Parse, "expected an integer, got " + j.dump());
}

inline Json rat_to_json(const Rat& r) { return to_string(r); }

inline Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  throw Error(ErrorKind::Parse, "rationals are strings \"p/q\", got " + j.dump());
}

inline Json to_json(const IntVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(int_to_json(x));
  return a;
}

inline IntVec intvec_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "expected an array of integers, got " + j.dump());
  IntVec v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

inline const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::Parse, std::string("missing key '") + key + "'");
  return j.at(key);
}

inline Json to_json(Topology t) { return t == Topology::Open ? "open" : "closed"; }
inline Json to_json(Side s) { return s == Side::Primal ? "primal" : "dual"; }

inline Topology topology_from_json(const Json& j) {
  if (j == "open") return Topology::Open;
  if (j == "closed") return Topology::Closed;
  throw Error(ErrorKind::Parse, "topology must be \"open\" or \"closed\", got " + j.dump());
}

inline Side side_from_json(const Json& j) {
  if (j == "primal") return Side::Primal;
  if (j == "dual") return Side::Dual;
  throw Error(ErrorKind::Parse, "side must be \"primal\" or \"dual\", got " + j.dump());
}

inline Json to_json(const ProjPoint& p) { return to_json(p.coords()); }
inline Json to_json(const ProjHyperplane& h) { return to_json(h.functional()); }

inline ProjPoint point_from_json(const Json& j) { return ProjPoint(intvec_from_json(j)); }
inline ProjHyperplane hyperplane_from_json(const Json& j) { return ProjHyperplane(intvec_from_json(j)); }

/// {"topology", "side", "generators"}; generators list the rays followed by
/// both orientations of each lineality vector.
inline Json to_json(const ProjConvexPolytope& p) {
  Json g = Json::array();
  for (const auto& v : p.cone().generators()) g.push_back(to_json(v));
  return {{"topology", to_json(p.topology())}, {"side", to_json(p.side())}, {"generators", g}};
}

inline ProjConvexPolytope polytope_from_json(const Json& j) {
  const Topology t = topology_from_json(require(j, "topology"));
  const Side s = j.contains("side") ? side_from_json(j.at("side")) : Side::Primal;
  std::vector<IntVec> gens;
  for (const auto& g : require(j, "generators")) gens.push_back(intvec_from_json(g));
  if (gens.empty()) throw Error(ErrorKind::Parse, "polytope needs generators");
  for (const auto& g : gens) check_dims(g.size(), gens.front().size(), "polytope_from_json");
  return ProjConvexPolytope::from_generators(gens, t, s);
}

inline Json to_json(const MultiConvexSet& m) {
  Json fam = Json::array(), cells = Json::array();
  for (const auto& p : m.family()) fam.push_back(to_json(p));
  for (const auto& c : m.cells()) cells.push_back({{"signs", c.signs.signs}, {"polytope", to_json(c.polytope)}});
  Json out = {{"family", fam}, {"cells", cells}};
  if (!m.family().empty()) {
    out["topology"] = to_json(m.topology());
    out["side"] = to_json(m.side());
  }
  return out;
}

/// Rebuilds the cells from the family and checks them against the listed ones.
inline MultiConvexSet multiconvex_from_json(const Json& j) {
  std::vector<ProjConvexPolytope> fam;
  for (const auto& p : require(j, "family")) fam.push_back(polytope_from_json(p));
  MultiConvexSet m = decompose(fam);
  if (j.contains("cells")) {
    std::vector<Cell> listed;
    for (const auto& c : j.at("cells"))
      listed.push_back({SignVector{require(c, "signs").get<std::vector<int>>()}, polytope_from_json(require(c, "polytope"))});
    if (MultiConvexSet(fam, listed).cells() != m.cells())
      throw Error(ErrorKind::Parse, "listed cells do not match the family's decomposition");
  }
  return m;
}

inline Json to_json(const std::vector<ProjPoint>& pts, Side side) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(to_json(p));
  return {{"side", to_json(side)}, {"points", a}};
}

inline std::vector<ProjPoint> points_from_json(const Json& j, Side* side = nullptr) {
  if (side) *side = j.contains("side") ? side_from_json(j.at("side")) : Side::Primal;
  std::vector<ProjPoint> out;
  for (const auto& p : require(j, "points")) out.push_back(point_from_json(p));
  return out;
}

inline Json to_json(const Scene& s) {
  Json polys = Json::array();
  for (const auto& p : s.polygons) {
    Json vs = Json::array();
    for (const auto& [x, y] : p.vertices) vs.push_back({rat_to_json(x), rat_to_json(y)});
    polys.push_back({{"name", p.name}, {"vertices", vs}});
  }
  return {{"polygons", polys}};
}

inline Scene scene_from_json(const Json& j) {
  Scene s;
  for (const auto& p : require(j, "polygons")) {
    Polygon poly;
    poly.name = p.contains("name") ? p.at("name").get<std::string>() : "S" + std::to_string(s.polygons.size() + 1);
    for (const auto& v : require(p, "vertices")) {
      if (!v.is_array() || v.size() != 2) throw Error(ErrorKind::Parse, "vertices are [x, y] pairs, got " + v.dump());
      poly.vertices.emplace_back(rat_from_json(v[0]), rat_from_json(v[1]));
    }
    s.polygons.push_back(std::move(poly));
  }
  validate_scene(s);
  return s;
}

inline Json to_json(const AvoidanceResult& r) {
  Json reps = Json::array();
  for (const auto& h : r.representatives) reps.push_back(to_json(h));
  return {{"degree", r.degree}, {"dual_cells", to_json(r.dual_cells)}, {"representatives", reps}};
}

/// Structural parse only; re-verifying the lines needs the scene.
inline AvoidanceResult avoidance_from_json(const Json& j) {
  AvoidanceResult r;
  r.dual_cells = multiconvex_from_json(require(j, "dual_cells"));
  for (const auto& h : require(j, "representatives")) r.representatives.push_back(hyperplane_from_json(h));
  r.degree = require(j, "degree").get<std::size_t>();
  if (r.degree != r.dual_cells.cells().size() || r.representatives.size() != r.degree)
    throw Error(ErrorKind::Parse, "degree does not match the cell list");
  return r;
}

inline Json read_json(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IOError, "cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
}

inline void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IOError, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorKind::IOError, "write to '" + path + "' failed");
}

}  // namespace projconv

#endif  // PROJCONV_IO_HPP
