// projconv: command-line front end.
//
// Every subcommand reads JSON from a path (or stdin when the path is "-" or
// omitted) and writes JSON to stdout or --out; render writes SVG.
// Exit codes: 0 ok, 1 verification failure, 2 usage or input error.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "projconv/projconv.hpp"

namespace {

using namespace projconv;

enum class Kind { Polytope, MultiConvex, Points, Scene, Avoidance };

Kind kind_of(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "expected a JSON object");
  if (j.contains("polygons")) return Kind::Scene;
  if (j.contains("representatives")) return Kind::Avoidance;
  if (j.contains("points")) return Kind::Points;
  if (j.contains("family")) return Kind::MultiConvex;
  if (j.contains("generators")) return Kind::Polytope;
  throw Error(ErrorKind::Parse, "cannot tell what the input is (expected generators, family, points or polygons)");
}

MultiConvexSet as_multiconvex(const Json& j) {
  switch (kind_of(j)) {
    case Kind::MultiConvex:
      return multiconvex_from_json(j);
    case Kind::Polytope:
      return decompose({polytope_from_json(j)});
    case Kind::Avoidance:
      return avoidance_from_json(j).dual_cells;
    case Kind::Scene:
      return avoiding_lines(scene_from_json(j)).dual_cells;
    case Kind::Points:
      break;
  }
  throw Error(ErrorKind::Parse, "a point set is not a multi-convex set; use dual or saturate");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projective convexity in P^1..P^3 with exact arithmetic"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string out = "-";
  std::string chart = "[1,0,0]";
  std::uint64_t seed = 7;
  int grid = 41;
  double width = 8;

  auto with_io = [&](CLI::App* sub) {
    sub->add_option("input", input, "JSON input file ('-' for stdin)");
    sub->add_option("--out,-o", out, "output file ('-' for stdout)");
  };

  auto* dual = app.add_subcommand("dual", "Phi of a polytope, multi-convex set or point set");
  with_io(dual);
  auto* cells = app.add_subcommand("cells", "sign-cell decomposition of a family");
  with_io(cells);
  auto* comps = app.add_subcommand("components", "components and degree");
  with_io(comps);
  auto* cocomps = app.add_subcommand("cocomponents", "co-components and co-degree");
  with_io(cocomps);
  auto* sat = app.add_subcommand("saturate", "Phi o Phi of a point set, polytope or multi-convex set");
  with_io(sat);
  auto* avoid = app.add_subcommand("avoid-lines", "all lines avoiding every polygon of a scene");
  with_io(avoid);
  auto* render = app.add_subcommand("render", "SVG of the cells in an affine chart");
  with_io(render);
  render->add_option("--chart", chart, "chart hyperplane, e.g. \"[1,0,0]\"")->capture_default_str();
  render->add_option("--width,-w", width, "half-width W of the window [-W, W]^2")->capture_default_str();
  auto* check = app.add_subcommand("check", "run the property suite");
  check->add_option("--seed", seed, "random seed")->capture_default_str();
  check->add_option("--grid", grid, "oracle grid resolution")->capture_default_str()->check(CLI::Range(2, 401));
  check->add_option("--out,-o", out, "report file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      std::string report;
      bool ok = true;
      auto add = [&](const std::vector<CheckResult>& rs) {
        for (const auto& r : rs) {
          report += format(r) + "\n";
          ok = ok && r.pass;
        }
      };
      add(run_acceptance(seed));
      add(run_properties(seed, grid));
      report += ok ? "all checks passed\n" : "some checks FAILED\n";
      write_text(out, report);
      return ok ? 0 : 1;
    }

    const Json j = read_json(input);
    if (dual->parsed()) {
      switch (kind_of(j)) {
        case Kind::Polytope:
          write_text(out, dump(to_json(phi_polytope(polytope_from_json(j)))));
          break;
        case Kind::Points: {
          Side side;
          const auto pts = points_from_json(j, &side);
          write_text(out, dump(to_json(phi_points(pts, side))));
          break;
        }
        default:
          write_text(out, dump(to_json(phi_multiconvex(as_multiconvex(j)))));
      }
    } else if (cells->parsed()) {
      write_text(out, dump(to_json(as_multiconvex(j))));
    } else if (comps->parsed()) {
      const auto m = as_multiconvex(j);
      Json list = Json::array();
      for (const auto& c : components(m)) list.push_back(to_json(c));
      write_text(out, dump({{"degree", degree(m)}, {"components", list}}));
    } else if (cocomps->parsed()) {
      const auto m = as_multiconvex(j);
      Json list = Json::array();
      for (const auto& c : cocomponents(m)) list.push_back(to_json(c));
      write_text(out, dump({{"codegree", list.size()}, {"cocomponents", list}}));
    } else if (sat->parsed()) {
      switch (kind_of(j)) {
        case Kind::Points: {
          Side side;
          const auto pts = points_from_json(j, &side);
          write_text(out, dump(to_json(saturate(pts, side))));
          break;
        }
        case Kind::Polytope:
          write_text(out, dump(to_json(saturate(polytope_from_json(j)))));
          break;
        default:
          write_text(out, dump(to_json(saturate(as_multiconvex(j)))));
      }
    } else if (avoid->parsed()) {
      write_text(out, dump(to_json(avoiding_lines(scene_from_json(j)))));
    } else if (render->parsed()) {
      const ProjHyperplane h(parse_coords(chart));
      if (width <= 0) throw Error(ErrorKind::Parse, "--width must be positive");
      if (kind_of(j) == Kind::Scene) {
        const Scene scene = scene_from_json(j);
        write_text(out, render_svg_document(avoiding_lines(scene), scene, h, width));
      } else {
        write_text(out, render_svg_document(as_multiconvex(j), h, width));
      }
    }
  } catch (const Error& e) {
    std::cerr << "projconv: " << e.what() << "\n";
    return e.kind() == ErrorKind::VerificationFailure ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "projconv: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
