#ifndef PROJCONV_SVG_HPP
#define PROJCONV_SVG_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "projconv/scene.hpp"

namespace projconv {

namespace svg_detail {

inline constexpr const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                                           "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};

inline std::string num(double v) {
  if (std::abs(v) < 5e-7) v = 0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

/// Affine frame of the chart {x : <h, x> = 1}: origin h / |h|^2 plus the
/// nullspace basis (u, v) of h.
struct Chart {
  IntVec h;
  IntVec u, v;
  Rat hh;

  explicit Chart(const ProjHyperplane& hp) : h(hp.functional()) {
    if (h.size() != 3) throw Error(ErrorKind::DimensionMismatch, "rendering needs the projective plane");
    auto ns = nullspace({h}, 3);
    u = ns.at(0);
    v = ns.at(1);
    hh = Rat(dot(h, h));
  }

  /// Chart coordinates (a, b) of a representative x with <h, x> > 0.
  std::pair<Rat, Rat> coords(const IntVec& x) const {
    const Rat s = Rat(dot(h, x));
    Vec y(3);
    for (std::size_t i = 0; i < 3; ++i) y[i] = Rat(x[i]) / s - Rat(h[i]) / hh;
    const Rat uu = Rat(dot(u, u)), uv = Rat(dot(u, v)), vv = Rat(dot(v, v));
    const Rat yu = dot(y, to_rat(u)), yv = dot(y, to_rat(v));
    const Rat det = uu * vv - uv * uv;
    return {(yu * vv - yv * uv) / det, (uu * yv - uv * yu) / det};
  }

  /// Homogeneous integer vector of the chart point (a, b).
  IntVec lift(const Rat& a, const Rat& b) const {
    Vec x(3);
    for (std::size_t i = 0; i < 3; ++i) x[i] = Rat(h[i]) / hh + a * Rat(u[i]) + b * Rat(v[i]);
    return primitive(x);
  }

  /// Cone over the square [-w, w]^2 of the chart.
  PolyhedralCone window(const Rat& w) const {
    return PolyhedralCone::from_generators({lift(-w, -w), lift(w, -w), lift(w, w), lift(-w, w)}, 3);
  }
};

/// The visible part of one lifted cone in the window, as a polygon in chart
/// coordinates ordered counterclockwise.
inline std::vector<std::pair<double, double>> clip(const PolyhedralCone& c, const PolyhedralCone& window,
                                                   const Chart& chart) {
  std::vector<std::pair<double, double>> pts;
  PolyhedralCone piece = intersect(c, window);
  for (const auto& r : piece.rays()) {
    auto [a, b] = chart.coords(r);
    pts.emplace_back(static_cast<double>(a), static_cast<double>(b));
  }
  if (pts.size() < 3) return pts;
  double cx = 0, cy = 0;
  for (const auto& [x, y] : pts) {
    cx += x;
    cy += y;
  }
  cx /= pts.size();
  cy /= pts.size();
  std::sort(pts.begin(), pts.end(), [&](const auto& p, const auto& q) {
    return std::atan2(p.second - cy, p.first - cx) < std::atan2(q.second - cy, q.first - cx);
  });
  return pts;
}

inline std::string path_of(const std::vector<std::vector<std::pair<double, double>>>& parts) {
  std::string d;
  for (const auto& pts : parts) {
    if (pts.empty()) continue;
    for (std::size_t i = 0; i < pts.size(); ++i)
      d += (i ? " L " : "M ") + num(pts[i].first) + " " + num(-pts[i].second);
    if (pts.size() >= 3) d += " Z ";
    else d += " ";
  }
  if (!d.empty() && d.back() == ' ') d.pop_back();
  return d;
}

inline std::string header(double w) {
  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(-w) + " " + num(-w) + " " + num(2 * w) + " " +
       num(2 * w) + "\" width=\"600\" height=\"600\">\n";
  s += "<rect x=\"" + num(-w) + "\" y=\"" + num(-w) + "\" width=\"" + num(2 * w) + "\" height=\"" + num(2 * w) +
       "\" fill=\"white\"/>\n";
  s += "<g id=\"axes\" stroke=\"#999\" stroke-width=\"" + num(w / 300) + "\">\n";
  s += "<line x1=\"" + num(-w) + "\" y1=\"0\" x2=\"" + num(w) + "\" y2=\"0\"/>\n";
  s += "<line x1=\"0\" y1=\"" + num(-w) + "\" x2=\"0\" y2=\"" + num(w) + "\"/>\n";
  s += "</g>\n";
  return s;
}

}  // namespace svg_detail

/// One path per cell, clipped to the square [-w, w]^2 of the chart; a cell
/// shows up as the union of its two lifted cones meeting the positive side
/// of the chart functional.
inline std::string render_svg(const MultiConvexSet& m, const ProjHyperplane& chart_h, double w = 8) {
  using namespace svg_detail;
  const Chart chart(chart_h);
  std::string s = header(w);
  s += "<g id=\"cells\" fill-opacity=\"0.55\" stroke=\"#333\" stroke-width=\"" + num(w / 400) + "\">\n";
  if (!m.empty()) {
    if (m.ambient_dim() != 3) throw Error(ErrorKind::DimensionMismatch, "rendering needs the projective plane");
    const PolyhedralCone win = chart.window(Rat(static_cast<long long>(std::llround(w * 1000)), 1000));
    std::size_t i = 0;
    for (const auto& cell : m.cells()) {
      const auto& c = cell.polytope.cone();
      const std::string d = path_of({clip(c, win, chart), clip(c.negated(), win, chart)});
      s += "<path id=\"cell-" + std::to_string(i) + "\" fill=\"" + kPalette[i % std::size(kPalette)] + "\" d=\"" + d +
           "\"/>\n";
      ++i;
    }
  }
  s += "</g>\n";
  return s;
}

inline std::string finish_svg(std::string s) { return s + "</svg>\n"; }

inline std::string render_svg_document(const MultiConvexSet& m, const ProjHyperplane& chart_h, double w = 8) {
  return finish_svg(render_svg(m, chart_h, w));
}

/// Dual cells of an avoidance result, plus the scene drawn in the primal
/// chart x0 = 1: polygons outlined and each representative line in its
/// cell's color.
inline std::string render_svg_document(const AvoidanceResult& r, const Scene& scene, const ProjHyperplane& chart_h,
                                       double w = 8) {
  using namespace svg_detail;
  std::string s = render_svg(r.dual_cells, chart_h, w);
  s += "<g id=\"scene\" fill=\"none\" stroke=\"black\" stroke-width=\"" + num(w / 250) + "\">\n";
  for (const auto& p : scene.polygons) {
    std::string pts;
    for (const auto& [x, y] : p.vertices) {
      if (!pts.empty()) pts += " ";
      pts += num(static_cast<double>(x)) + "," + num(-static_cast<double>(y));
    }
    s += "<polygon data-name=\"" + p.name + "\" points=\"" + pts + "\"/>\n";
  }
  for (std::size_t i = 0; i < r.representatives.size(); ++i) {
    const auto& f = r.representatives[i].functional();
    const double c = static_cast<double>(f[0]), a = static_cast<double>(f[1]), b = static_cast<double>(f[2]);
    // c + a x + b y = 0 clipped to the square.
    std::vector<std::pair<double, double>> hits;
    auto add = [&](double x, double y) {
      if (x >= -w - 1e-9 && x <= w + 1e-9 && y >= -w - 1e-9 && y <= w + 1e-9) hits.emplace_back(x, y);
    };
    if (b != 0) {
      add(-w, (-c + a * w) / b);
      add(w, (-c - a * w) / b);
    }
    if (a != 0) {
      add((-c + b * w) / a, -w);
      add((-c - b * w) / a, w);
    }
    if (hits.size() < 2) continue;
    std::sort(hits.begin(), hits.end());
    s += "<line class=\"representative\" stroke=\"" + std::string(kPalette[i % std::size(kPalette)]) + "\" x1=\"" +
         num(hits.front().first) + "\" y1=\"" + num(-hits.front().second) + "\" x2=\"" + num(hits.back().first) +
         "\" y2=\"" + num(-hits.back().second) + "\"/>\n";
  }
  s += "</g>\n";
  return finish_svg(s);
}

}  // namespace projconv

#endif  // PROJCONV_SVG_HPP
