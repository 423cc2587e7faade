#ifndef PROJCONV_CHECK_HPP
#define PROJCONV_CHECK_HPP

// Seeded property suite: the acceptance criteria plus module invariants.
// Every check is exact; samples are drawn from a seeded mt19937_64.

#include <chrono>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "projconv/duality.hpp"
#include "projconv/oracle.hpp"
#include "projconv/random.hpp"
#include "projconv/scene.hpp"

namespace projconv {

struct CheckResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

namespace check_detail {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Runs body(fail) and packs the outcome; fail(msg) records a violation.
inline CheckResult run(const std::string& id, const std::string& title, double budget,
                       const std::function<std::string(const std::function<void(const std::string&)>&)>& body) {
  CheckResult r;
  r.id = id;
  r.title = title;
  std::size_t failures = 0;
  std::string first;
  auto fail = [&](const std::string& msg) {
    if (failures++ == 0) first = msg;
  };
  Timer t;
  std::string summary;
  try {
    summary = body(fail);
  } catch (const std::exception& e) {
    fail(std::string("exception: ") + e.what());
  }
  r.seconds = t.seconds();
  std::ostringstream os;
  os << summary;
  if (failures) os << (summary.empty() ? "" : "; ") << failures << " violation(s), first: " << first;
  if (budget > 0 && r.seconds >= budget) os << (os.tellp() > 0 ? "; " : "") << "over time budget " << budget << " s";
  r.detail = os.str();
  r.pass = failures == 0 && (budget <= 0 || r.seconds < budget);
  return r;
}

inline std::string str(const ProjConvexPolytope& p) {
  std::string s = p.is_open() ? "open{" : "closed{";
  for (const auto& g : p.cone().generators()) s += format_coords(g);
  return s + "}";
}

/// The three coordinate-line complements, as irreducible open polytopes.
inline std::vector<ProjConvexPolytope> coordinate_complements() {
  std::vector<ProjConvexPolytope> out;
  for (int i = 0; i < 3; ++i) {
    IntVec e(3, Int(0));
    e[i] = 1;
    out.push_back(irreducible_polytope(IrreducibleConvex{ProjHyperplane(e)}));
  }
  return out;
}

inline std::vector<ProjConvexPolytope> line_complements(const std::vector<ProjHyperplane>& hs) {
  std::vector<ProjConvexPolytope> out;
  for (const auto& h : hs) out.push_back(irreducible_polytope(IrreducibleConvex{h}));
  return out;
}

inline ProjConvexPolytope crossed_c() {
  return ProjConvexPolytope::from_generators({{4, 16, 1}, {4, 16, -1}, {4, -16, 1}, {4, -16, -1}}, Topology::Closed);
}
inline ProjConvexPolytope crossed_d() {
  return ProjConvexPolytope::from_generators({{4, 1, 1}, {4, 1, -1}, {-4, 1, 1}, {-4, 1, -1}}, Topology::Closed);
}

/// Open iff w is strictly nonzero on int(P); closed iff nonzero on P.
/// Decided from P's generators by signs alone.
inline bool avoids_oracle(const ProjConvexPolytope& p, const IntVec& w) {
  int pos = 0, neg = 0, zero = 0;
  for (const auto& g : p.cone().generators()) {
    const Int v = oracle_detail::sdot(w, g);
    (v > 0 ? pos : v < 0 ? neg : zero)++;
  }
  if (p.is_open()) return pos == 0 || neg == 0 ? (pos + neg > 0) : false;
  return zero == 0 && (pos == 0 || neg == 0);
}

}  // namespace check_detail

// ---------------------------------------------------------------------------
// Acceptance criteria.

/// Criteria 1 and 2 share their runs.
inline std::vector<CheckResult> check_biduality(std::uint64_t seed, int per_topology = 200) {
  Rng rng(seed);
  std::vector<ProjConvexPolytope> polys;
  for (int i = 0; i < per_topology; ++i) polys.push_back(random_closed(rng));
  for (int i = 0; i < per_topology; ++i) polys.push_back(random_open(rng));
  std::vector<std::pair<ProjConvexPolytope, ProjConvexPolytope>> images;
  auto c1 = check_detail::run("1", "biduality: phi(phi(P)) == P", 10.0, [&](auto fail) {
    for (const auto& p : polys) {
      const auto q = phi_polytope(p);
      images.emplace_back(p, q);
      if (phi_polytope(q) != p) fail("phi(phi(P)) != P for " + check_detail::str(p));
    }
    return std::to_string(per_topology) + " closed + " + std::to_string(per_topology) + " open polytopes";
  });
  auto c2 = check_detail::run("2", "topology interchange under phi", 0, [&](auto fail) {
    for (const auto& [p, q] : images) {
      if (q.topology() != flip(p.topology())) fail("topology not flipped for " + check_detail::str(p));
      if (q.side() != flip(p.side())) fail("side not flipped for " + check_detail::str(p));
      try {
        ProjConvexPolytope again(q.cone(), q.topology(), q.side());
        if (again != q) fail("image not canonical for " + check_detail::str(p));
      } catch (const Error& e) {
        fail(std::string("image violates invariants: ") + e.what());
      }
    }
    return std::to_string(images.size()) + " images";
  });
  return {c1, c2};
}

/// Φ(∪ cells) against the intersection of the Φ-images: exact equality of
/// cell structures under reordering, plus grid agreement with the definition
/// (w avoids every cell, decided by generator signs).
inline CheckResult check_de_morgan(std::uint64_t seed, int trials = 100) {
  Rng rng(seed);
  return check_detail::run("3", "De Morgan: phi(union) == intersection of phi-images", 0, [&](auto fail) {
    int used = 0, grid_points = 0;
    const auto grid = SampleGrid::directions(4);
    while (used < trials) {
      const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
      std::vector<ProjConvexPolytope> fam;
      for (std::size_t i = 0; i < n; ++i) fam.push_back(random_open(rng, 3, 4));
      const MultiConvexSet m = decompose(fam);
      if (m.empty()) continue;
      ++used;
      const auto cells = m.pieces();
      const MultiConvexSet lhs = phi_multiconvex(m);
      std::vector<ProjConvexPolytope> images;
      for (auto it = cells.rbegin(); it != cells.rend(); ++it) images.push_back(phi_polytope(*it));
      const MultiConvexSet rhs = decompose(images);
      if (!(lhs == rhs)) fail("cell structures differ for a family of " + std::to_string(n));
      grid.for_each([&](const std::vector<long long>& v) {
        const IntVec w(v.begin(), v.end());
        bool avoids_all = true;
        for (const auto& c : cells) avoids_all = avoids_all && check_detail::avoids_oracle(c, w);
        ++grid_points;
        if (membership(lhs, ProjPoint(w)) != avoids_all) fail("pointwise mismatch at " + format_coords(w));
      });
    }
    return std::to_string(used) + " families, " + std::to_string(grid_points) + " grid checks";
  });
}

inline CheckResult check_arrangement_degree(std::uint64_t seed, int per_k = 3) {
  Rng rng(seed);
  return check_detail::run("4", "arrangement degree 1 + k(k-1)/2 == cell_count_oracle", 5.0, [&](auto fail) {
    const auto grid = SampleGrid::directions(54);
    std::string note;
    {
      const auto m = decompose(check_detail::coordinate_complements());
      const std::size_t oracle = cell_count_oracle({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, grid);
      if (degree(m) != 4 || oracle != 4)
        fail("coordinate lines: degree " + std::to_string(degree(m)) + ", oracle " + std::to_string(oracle));
      note = "coordinate lines degree " + std::to_string(degree(m));
    }
    for (std::size_t k = 1; k <= 6; ++k) {
      for (int t = 0; t < per_k; ++t) {
        const auto hs = random_generic_lines(rng, k);
        const std::size_t want = 1 + k * (k - 1) / 2;
        const std::size_t got = degree(decompose(check_detail::line_complements(hs)));
        const std::size_t oracle = cell_count_oracle(hs, grid);
        if (got != want || oracle != want)
          fail("k=" + std::to_string(k) + ": degree " + std::to_string(got) + ", oracle " + std::to_string(oracle));
      }
    }
    return note + "; k = 1..6, " + std::to_string(per_k) + " instances each";
  });
}

inline CheckResult check_remark() {
  return check_detail::run("5", "saturation of 3 of the 4 coordinate cells is all 4", 0, [&](auto fail) {
    const MultiConvexSet m = decompose(check_detail::coordinate_complements());
    const auto cells = m.pieces();
    if (cells.size() != 4) fail("expected 4 cells, got " + std::to_string(cells.size()));
    for (std::size_t drop = 0; drop < cells.size(); ++drop) {
      std::vector<ProjConvexPolytope> three;
      for (std::size_t i = 0; i < cells.size(); ++i)
        if (i != drop) three.push_back(cells[i]);
      const MultiConvexSet s = saturate_union(three);
      if (!(s.pieces() == cells)) fail("dropping cell " + std::to_string(drop) + " does not restore it");
    }
    return "4 choices of 3 cells";
  });
}

inline CheckResult check_crossed_pair() {
  return check_detail::run("6", "crossed pair: degree 2, co-components {C, D}", 0, [&](auto fail) {
    const auto c = check_detail::crossed_c();
    const auto d = check_detail::crossed_d();
    const MultiConvexSet m = decompose({c, d});
    if (degree(m) != 2) fail("degree " + std::to_string(degree(m)));
    auto want = std::vector<ProjConvexPolytope>{c, d};
    std::sort(want.begin(), want.end());
    if (cocomponents(m) != want) fail("co-components differ from {C, D}");
    return "degree " + std::to_string(degree(m)) + ", co-degree " + std::to_string(codegree(m));
  });
}

/// The returned segment's 5 interior samples t/6 are members; the opposite
/// segment is probed at the same 5 parameters and at its crossing with the
/// witness hyperplane. Membership is decided by the oracle.
inline CheckResult check_unique_segment(std::uint64_t seed, int trials = 500) {
  Rng rng(seed);
  return check_detail::run("7", "exactly one segment joining two members lies inside", 0, [&](auto fail) {
    int by_uniform = 0;
    for (int i = 0; i < trials; ++i) {
      auto poly = random_polytope(rng);
      while (!poly.is_open() && poly.cone().rays().size() < 2) poly = random_polytope(rng);  // single point
      const auto hs = brute_force_halfspaces(poly);
      ProjPoint p = random_member(rng, poly), q = random_member(rng, poly);
      while (q == p) q = random_member(rng, poly);
      const Segment s = segment_in(poly, p, q);
      const IntVec& u = s.u;
      const IntVec v = s.sign == SegmentSign::NonNegative ? s.v : negated(s.v);
      bool inside = true, outside_found = false;
      for (long long t = 1; t <= 5; ++t) {
        IntVec in(3), out(3);
        for (std::size_t j = 0; j < 3; ++j) {
          in[j] = t * u[j] + (6 - t) * v[j];
          out[j] = t * u[j] - (6 - t) * v[j];
        }
        inside = inside && oracle_contains(hs, in, poly.is_open());
        if (!oracle_contains(hs, out, poly.is_open())) outside_found = true;
      }
      if (outside_found) ++by_uniform;
      const IntVec f = witness_functional(poly);
      IntVec z(3);
      for (std::size_t j = 0; j < 3; ++j) z[j] = dot(f, v) * u[j] - dot(f, u) * v[j];
      if (!oracle_contains(hs, z, poly.is_open())) outside_found = true;
      if (!inside) fail("returned segment leaves " + check_detail::str(poly));
      if (!outside_found) fail("opposite segment has no sampled non-member in " + check_detail::str(poly));
    }
    return std::to_string(trials) + " triples; uniform samples alone exposed the opposite segment in " +
           std::to_string(by_uniform);
  });
}

inline CheckResult check_galois(std::uint64_t seed, int trials = 200) {
  Rng rng(seed);
  return check_detail::run("8", "Galois laws on finite point sets", 0, [&](auto fail) {
    for (int i = 0; i < trials; ++i) {
      std::set<ProjPoint> uniq;
      const auto n = rng.uniform(1, 4);
      while (static_cast<long long>(uniq.size()) < n) uniq.insert(rng.point(3, 5));
      std::vector<ProjPoint> s(uniq.begin(), uniq.end());
      ProjPoint extra = rng.point(3, 5);
      while (uniq.count(extra)) extra = rng.point(3, 5);
      std::vector<ProjPoint> t = s;
      t.push_back(extra);

      const MultiConvexSet phi_s = phi_points(s);
      const MultiConvexSet sat_s = phi_checked_nonempty(phi_s);
      for (const auto& p : s)
        if (!membership(sat_s, p)) fail("S not inside sat(S) at " + to_string(p));
      if (!(saturate(sat_s) == sat_s)) fail("saturation not idempotent");
      const MultiConvexSet phi_t = phi_points(t);
      if (!subset(phi_t, phi_s)) fail("phi not antitone on S subset T");
      if (!subset(sat_s, saturate(t))) fail("sat not monotone on S subset T");
      if (!(phi_multiconvex(sat_s) == phi_s)) fail("phi != phi o phi o phi");
    }
    return std::to_string(trials) + " point sets";
  });
}

inline CheckResult check_bijection(std::uint64_t seed, int trials = 50) {
  Rng rng(seed);
  return check_detail::run("9", "components of M <-> co-components of phi(M); triangle maps inverse", 0,
                           [&](auto fail) {
    int used = 0;
    std::size_t comps_total = 0;
    while (used < trials) {
      const auto a = random_closed(rng, 3, 5);
      const auto b = random_closed(rng, 3, 5);
      const MultiConvexSet m = decompose({a, b});
      if (m.empty()) continue;
      ++used;
      const auto comps = components(m);
      comps_total += comps.size();
      const MultiConvexSet phi_m = phi_multiconvex(m);
      const auto cocomps = cocomponents(phi_m);
      if (comps.size() != cocomps.size())
        fail(std::to_string(comps.size()) + " components vs " + std::to_string(cocomps.size()) + " co-components");
      std::vector<ProjConvexPolytope> mapped;
      for (const auto& n : comps) mapped.push_back(phi_polytope(n));
      std::sort(mapped.begin(), mapped.end());
      if (mapped != cocomps) fail("phi does not map components onto co-components");
      for (const auto& n : comps)
        if (triangle_left(triangle_right(n, m)) != n) fail("left o right != id on a component");
      for (const auto& mc : cocomps)
        if (triangle_right(triangle_left(mc), m) != mc) fail("right o left != id on a co-component");
    }
    return std::to_string(used) + " instances, " + std::to_string(comps_total) + " components";
  });
}

inline CheckResult check_avoiding_lines(std::uint64_t seed, int scenes = 50, int lines = 1000) {
  Rng rng(seed);
  return check_detail::run("10", "avoiding lines: representatives and classification agree with oracle", 30.0,
                           [&](auto fail) {
    std::size_t cells = 0, classified = 0, avoiding = 0;
    for (int i = 0; i < scenes; ++i) {
      const Scene scene = random_scene(rng);
      const AvoidanceResult r = avoiding_lines(scene);
      cells += r.degree;
      for (const auto& h : r.representatives)
        for (const auto& p : scene.polygons)
          if (!avoidance_oracle(p.vertices, h)) fail("representative " + to_string(h) + " meets " + p.name);
      for (int j = 0; j < lines; ++j) {
        const ProjHyperplane h(rng.nonzero_vector(3, 20));
        bool oracle = true;
        for (const auto& p : scene.polygons) oracle = oracle && avoidance_oracle(p.vertices, h);
        const bool kernel = avoids_scene(r, h);
        avoiding += oracle;
        ++classified;
        if (kernel != oracle) fail("line " + to_string(h) + " classified differently");
      }
    }
    return std::to_string(scenes) + " scenes, " + std::to_string(cells) + " cells, " + std::to_string(classified) +
           " lines (" + std::to_string(avoiding) + " avoiding)";
  });
}

inline CheckResult check_delta(std::uint64_t seed, int trials = 1000) {
  Rng rng(seed);
  return check_detail::run("11", "delta reverses incidence", 0, [&](auto fail) {
    int members = 0;
    for (int i = 0; i < trials; ++i) {
      const ProjPoint p = rng.point(3, 4);
      const IrreducibleConvex c{ProjHyperplane(rng.nonzero_vector(3, 4))};
      const bool a = contains(c, p);
      const bool b = contains(delta(p), delta_inv(c));
      members += a;
      if (a != b) fail("incidence not reversed for " + to_string(p) + " and " + to_string(c.excluded));
      if (delta_inv(delta(p)) != p || delta(delta_inv(c)) != c) fail("delta not a bijection");
    }
    return std::to_string(trials) + " pairs, " + std::to_string(members) + " memberships";
  });
}

/// Criteria 1..11 in order.
inline std::vector<CheckResult> run_acceptance(std::uint64_t seed) {
  std::vector<CheckResult> out = check_biduality(seed + 1);
  out.push_back(check_de_morgan(seed + 3));
  out.push_back(check_arrangement_degree(seed + 4));
  out.push_back(check_remark());
  out.push_back(check_crossed_pair());
  out.push_back(check_unique_segment(seed + 7));
  out.push_back(check_galois(seed + 8));
  out.push_back(check_bijection(seed + 9));
  out.push_back(check_avoiding_lines(seed + 10));
  out.push_back(check_delta(seed + 11));
  return out;
}

// ---------------------------------------------------------------------------
// Module invariants.

/// Kernel facets and rays against the brute-force enumeration on random 3-D
/// cones with at most 6 rays from {-3..3}.
inline CheckResult check_dd_consistency(std::uint64_t seed, int trials = 300) {
  Rng rng(seed);
  return check_detail::run("dd", "double description matches brute force", 0, [&](auto fail) {
    for (int i = 0; i < trials; ++i) {
      std::vector<IntVec> gens;
      const auto n = rng.uniform(1, 6);
      for (long long j = 0; j < n; ++j) gens.push_back(rng.nonzero_vector(3, 3));
      const auto c = PolyhedralCone::from_generators(gens, 3);
      for (const auto& g : c.generators())
        for (const auto& f : c.inequalities())
          if (dot(f, g) < 0) fail("generator violates facet");
      for (const auto& g : gens)
        if (!c.contains(g)) fail("input generator outside its cone");
      const auto hs = brute_force_halfspaces(gens, 3);
      // Facets of the brute force: valid inequalities whose tight generators
      // span a hyperplane of the cone's span.
      const std::size_t dim = 3 - c.equations().size();
      std::set<IntVec> facets;
      for (const auto& f : hs.inequalities) {
        std::vector<IntVec> tight;
        for (const auto& g : gens)
          if (oracle_detail::sdot(f, g) == 0) tight.push_back(g);
        std::size_t r = 0;
        // rank of the tight set by independent-subset search
        for (std::size_t k = std::min<std::size_t>(3, tight.size()); k > 0 && r == 0; --k)
          oracle_detail::for_each_subset(tight.size(), k, [&](const std::vector<std::size_t>& s) {
            std::vector<IntVec> vs;
            for (auto j : s) vs.push_back(tight[j]);
            if (r == 0 && oracle_detail::independent(vs, 3)) r = k;
          });
        if (r + 1 == dim) facets.insert(primitive(f));
      }
      if (c.is_fulldim()) {
        std::set<IntVec> kernel(c.facets().begin(), c.facets().end());
        if (kernel != facets) fail("facet sets differ for " + std::to_string(gens.size()) + " generators");
      }
      if (c.is_salient() && c.is_fulldim()) {
        std::set<IntVec> extreme;
        for (const auto& g : gens) {
          std::vector<IntVec> tight;
          for (const auto& f : facets)
            if (oracle_detail::sdot(f, g) == 0) tight.push_back(f);
          bool ext = false;
          oracle_detail::for_each_subset(tight.size(), 2, [&](const std::vector<std::size_t>& s) {
            if (!ext && oracle_detail::independent({tight[s[0]], tight[s[1]]}, 3)) ext = true;
          });
          if (ext) extreme.insert(primitive(g));
        }
        if (extreme.size() != c.rays().size()) fail("ray counts differ");
      }
    }
    return std::to_string(trials) + " cones";
  });
}

inline CheckResult check_cone_biduality(std::uint64_t seed, int trials = 500) {
  Rng rng(seed);
  return check_detail::run("cone", "dual_cone involution and order reversal", 0, [&](auto fail) {
    for (int i = 0; i < trials; ++i) {
      const auto p = random_closed(rng, 3, 6, 5);
      const auto& c = p.cone();
      if (dual_cone(dual_cone(c)) != c) fail("dual_cone o dual_cone != id");
      std::vector<IntVec> more = c.rays();
      more.push_back(rng.nonzero_vector(3, 5));
      const auto b = PolyhedralCone::from_generators(more, 3);
      if (!b.contains(c)) fail("conic hull not a superset");
      if (!dual_cone(c).contains(dual_cone(b))) fail("dual_cone not order reversing");
    }
    return std::to_string(trials) + " salient cones";
  });
}

inline CheckResult check_membership_oracle(std::uint64_t seed, int trials = 100, int resolution = 21) {
  Rng rng(seed);
  const std::string n = std::to_string(resolution);
  return check_detail::run("oracle", "kernel membership == oracle membership on a " + n + "x" + n + " chart grid", 0,
                           [&](auto fail) {
    const auto grid = SampleGrid::chart(resolution, 4);
    std::size_t members = 0;
    for (int i = 0; i < trials; ++i) {
      auto poly = random_polytope(rng);
      while (!poly.is_open() && poly.cone().rays().size() < 2) poly = random_polytope(rng);  // single point
      const auto hs = brute_force_halfspaces(poly);
      grid.for_each([&](const std::vector<long long>& v) {
        const IntVec x(v.begin(), v.end());
        const bool o = oracle_contains(hs, x, poly.is_open());
        members += o;
        if (membership(poly, ProjPoint(x)) != o) fail("mismatch at " + format_coords(x) + " for " + check_detail::str(poly));
      });
      if (!poly.is_open())
        for (const auto& r : poly.cone().rays())
          if (!oracle_contains(hs, r, false)) fail("ray outside its closed polytope");
      const IntVec w = witness_functional(poly);
      if (!check_detail::avoids_oracle(poly, w)) fail("witness hyperplane meets " + check_detail::str(poly));
    }
    return std::to_string(trials) + " polytopes, " + std::to_string(members) + " member samples";
  });
}

/// Cell disjointness, co-component intersection and pairwise inconsistency,
/// and separating_irreducible against saturation membership.
inline CheckResult check_multiconvex(std::uint64_t seed, int trials = 60) {
  Rng rng(seed);
  return check_detail::run("multiconvex", "cells, co-components and separation", 0, [&](auto fail) {
    const auto grid = SampleGrid::directions(2);
    int used = 0;
    while (used < trials) {
      const bool open = rng.coin();
      std::vector<ProjConvexPolytope> fam;
      const auto n = rng.uniform(1, 3);
      for (long long i = 0; i < n; ++i) fam.push_back(open ? random_open(rng, 3, 4, 5) : random_closed(rng, 3, 4, 5));
      const MultiConvexSet m = decompose(fam);
      if (m.empty()) continue;
      ++used;
      const auto cells = m.pieces();
      for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i + 1; j < cells.size(); ++j)
          for (int s : {1, -1}) {
            const auto other = s > 0 ? cells[j].cone() : cells[j].cone().negated();
            const auto both = intersect(cells[i].cone(), other);
            if (open ? both.is_fulldim() : !both.is_zero()) fail("cells overlap");
          }
      const auto cocomps = cocomponents(m);
      if (!(decompose(cocomps).pieces() == cells)) fail("intersection of co-components != M");
      for (std::size_t i = 0; i < cocomps.size(); ++i)
        for (std::size_t j = i + 1; j < cocomps.size(); ++j)
          if (consistent(cocomps[i], cocomps[j])) fail("two co-components share a witness");
      bool one_lifting = false;
      detail::for_each_consistent_lifting(fam, nullptr, [&](const std::vector<int>&, const Vec&) {
        one_lifting = true;
        return false;
      });
      if (one_lifting && degree(m) > 1) fail("consistent family with degree > 1");
      const MultiConvexSet sat = saturate(m);
      grid.for_each([&](const std::vector<long long>& v) {
        const ProjPoint p(IntVec(v.begin(), v.end()));
        if (separating_irreducible(m, p).has_value() == membership(sat, p))
          fail("separating_irreducible disagrees with saturation at " + to_string(p));
      });
    }
    return std::to_string(trials) + " multi-convex sets";
  });
}

inline std::vector<CheckResult> run_properties(std::uint64_t seed, int grid_resolution = 21) {
  return {check_dd_consistency(seed + 101), check_cone_biduality(seed + 102),
          check_membership_oracle(seed + 103, 100, grid_resolution), check_multiconvex(seed + 104)};
}

inline std::string format(const CheckResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << " (" << std::fixed;
  os.precision(2);
  os << r.seconds << " s)";
  if (!r.detail.empty()) os << ": " << r.detail;
  return os.str();
}

}  // namespace projconv

#endif  // PROJCONV_CHECK_HPP
