// Command-line front end.
//
// Verbs: figures, polytope, dual, pconv, valuation, cox, points check-axiom.
// Exit codes: 0 success, 1 internal verification failure, 2 input error.

#include "polyptych/cox.hpp"
#include "polyptych/expr.hpp"
#include "polyptych/figures.hpp"
#include "polyptych/json_io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace fs = std::filesystem;
using namespace polyptych;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

// Atomic per-file write: stage next to the target, then rename.
void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << content;
  }
  fs::rename(tmp, path);
}

bool g_emit_json = true;

void emit(const Json& j, const std::string& out_dir, const std::string& name) {
  if (!g_emit_json) return;
  if (out_dir.empty()) {
    std::cout << dump_json(j);
  } else {
    write_file(fs::path(out_dir) / name, dump_json(j));
    std::cout << (fs::path(out_dir) / name).string() << "\n";
  }
}

int run_figures(const std::string& selector, const std::string& out_dir, bool with_svg) {
  std::vector<std::string> ids = figure_ids();
  if (selector != "all") {
    if (std::find(ids.begin(), ids.end(), selector) == ids.end()) {
      std::cerr << "unknown figure selector: " << selector << " (use all or fig3..fig16)\n";
      return kExitInputError;
    }
    ids = {selector};
  }
  for (const std::string& id : ids) {
    FigureOutput fig = make_figure(id);
    write_file(fs::path(out_dir) / (id + ".json"), dump_json(fig.json));
    std::cout << (fs::path(out_dir) / (id + ".json")).string() << "\n";
    if (with_svg)
      for (const auto& [name, content] : fig.svgs) {
        write_file(fs::path(out_dir) / name, content);
        std::cout << (fs::path(out_dir) / name).string() << "\n";
      }
  }
  return kExitOk;
}

// Shared data assembly for the polytope/dual verbs, with the internal
// consistency checks that gate exit code 1: chart images must round-trip
// through their half-plane representations, and both descriptions of the
// dual (support function vs. vertex half-spaces) must agree on a grid.
int run_polytope(const Instance& inst, bool dual_focus, const std::string& out_dir,
                 bool with_svg) {
  PLPolytope P = instance_polytope(inst);
  if (!P.compact()) {
    std::cerr << "instance polytope is not compact\n";
    return kExitInputError;
  }
  Json j;
  j["s"] = inst.s;
  j["polytope"] = detail::polytope_json(P);

  bool ok = true;
  for (ChartId chart : kCharts) {
    const ConvexPolygon& poly = P.chart_polygon(chart);
    Region back = intersect(hrep(poly));
    ok = ok && back.kind == Region::Kind::bounded && back.polygon == poly;
  }

  bool dual_available = origin_interior(P);
  j["dual_available"] = dual_available;
  if (dual_available) {
    PLPolytope dual = dual_polytope(P);
    j["dual"] = detail::dual_json(dual);
    // Cross-check the two descriptions of the dual on the integer points of a
    // window around its chart-1 image.
    const ConvexPolygon& d1 = dual.chart_polygon(ChartId::chart1);
    Int xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    for (const Vec2& v : d1.verts) {
      if (floor_int(v.x) - 1 < xmin) xmin = floor_int(v.x) - 1;
      if (ceil_int(v.x) + 1 > xmax) xmax = ceil_int(v.x) + 1;
      if (floor_int(v.y) - 1 < ymin) ymin = floor_int(v.y) - 1;
      if (ceil_int(v.y) + 1 > ymax) ymax = ceil_int(v.y) + 1;
    }
    for (Int y = ymin; y <= ymax && ok; ++y)
      for (Int x = xmin; x <= xmax && ok; ++x) {
        ElementR n{to_rational(Vec2I{x, y})};
        bool by_support = support_function(P, n) >= -1;
        bool by_halfspaces = pl_contains(dual, n);
        if (by_support != by_halfspaces) ok = false;
      }
  }
  j["verified"] = ok;

  if (with_svg && !out_dir.empty()) {
    FigureOutput tmp;
    detail::add_polytope_svgs(tmp, dual_focus ? "dual" : "polytope",
                              dual_focus && dual_available ? dual_polytope(P) : P);
    for (const auto& [name, content] : tmp.svgs) {
      write_file(fs::path(out_dir) / name, content);
      std::cout << (fs::path(out_dir) / name).string() << "\n";
    }
  }
  if (dual_focus && !dual_available) {
    std::cerr << "dual is unavailable: the origin is not interior\n";
    return kExitInputError;
  }
  emit(j, out_dir, dual_focus ? "dual.json" : "polytope.json");
  return ok ? kExitOk : kExitVerificationFailure;
}

int run_pconv(const Instance& inst, const std::string& out_dir) {
  if (inst.elements.empty()) {
    std::cerr << "pconv requires an \"elements\" list in the instance\n";
    return kExitInputError;
  }
  ShearParam s{inst.s};
  PLPolytope hull = point_convex_hull(s, inst.elements);
  Json j;
  j["s"] = inst.s;
  Json e = Json::array();
  for (const Element& m : inst.elements)
    e.push_back(Json::array({static_cast<long long>(m.c1.x), static_cast<long long>(m.c1.y)}));
  j["elements"] = e;
  Json cons = Json::array();
  for (const PLHalfSpace& h : hull.constraints)
    cons.push_back(Json{{"point", json_of(h.p)}, {"threshold", json_of(h.bound)}});
  j["constraints"] = cons;
  j["chart1_vertices"] = json_of(hull.chart_polygon(ChartId::chart1));
  j["chart2_vertices"] = json_of(hull.chart_polygon(ChartId::chart2));
  emit(j, out_dir, "pconv.json");
  return kExitOk;
}

int run_valuation(const std::string& expr, long long s_value, const std::string& out_dir) {
  ShearParam s{s_value};
  AlgebraElement f;
  try {
    f = parse_expression(s, expr);
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position << ": " << e.what() << "\n";
    return kExitInputError;
  }
  PLFunction v = valuation(s, f);
  Json j;
  j["s"] = s_value;
  j["expr"] = expr;
  if (v.infinite) {
    j["valuation"] = "infinity";
  } else {
    Json pieces = Json::array();
    for (const PLPiece& p : v.pieces)
      pieces.push_back(Json::array({json_of(p.a), json_of(p.b), json_of(p.c)}));
    j["pieces"] = pieces;
    if (auto pt = as_point(s, v)) j["point"] = json_of(*pt);
  }
  emit(j, out_dir, "valuation.json");
  return kExitOk;
}

int run_cox(const Instance& inst, const std::string& out_dir) {
  for (const Rational& t : inst.thresholds)
    if (t != -1) {
      std::cerr << "cox requires all thresholds equal to -1\n";
      return kExitInputError;
    }
  ShearParam s{inst.s};
  CoxInstance ci = cox_instance(s, inst.points);
  CoxReport rep = verify_claims(ci);
  emit(json_of(rep), out_dir, "cox.json");
  // Discrepancies with the reference data are findings, not failures; a
  // failed internal oracle is.
  return rep.oracles_ok() ? kExitOk : kExitVerificationFailure;
}

int run_check_axiom(const Instance& inst, const std::string& out_dir) {
  ShearParam s{inst.s};
  std::vector<Element> elems = inst.elements;
  if (elems.empty())
    for (long long x = -3; x <= 3; ++x)
      for (long long y = -3; y <= 3; ++y) elems.push_back({Vec2I{Int(x), Int(y)}});
  Json results = Json::array();
  bool all_ok = true;
  for (const PointTriple& p : inst.points) {
    bool ok = true;
    Json witness;
    for (std::size_t i = 0; i < elems.size() && ok; ++i)
      for (std::size_t j = 0; j < elems.size() && ok; ++j)
        if (!point_axiom_check(s, p, elems[i], elems[j])) {
          ok = false;
          witness = Json::array({Json::array({static_cast<long long>(elems[i].c1.x),
                                              static_cast<long long>(elems[i].c1.y)}),
                                 Json::array({static_cast<long long>(elems[j].c1.x),
                                              static_cast<long long>(elems[j].c1.y)})});
        }
    Json r{{"point", json_of(p)}, {"is_point", ok}};
    if (!ok) r["failing_pair"] = witness;
    results.push_back(r);
    all_ok = all_ok && ok;
  }
  Json j;
  j["s"] = inst.s;
  j["results"] = results;
  emit(j, out_dir, "check-axiom.json");
  return all_ok ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for the two-chart rank-2 mutation lattice family, its PL convex "
               "geometry, and the associated detropicalized algebra"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string instance_path, out_dir, expr, selector = "all";
  long long s_value = 1;
  bool with_json = true, with_svg = false;
  app.add_option("--instance", instance_path, "instance file (JSON)");
  app.add_option("--out", out_dir, "output directory (default: stdout for JSON)");
  app.add_option("--s", s_value, "shear parameter for expression commands");
  app.add_flag("--json,!--no-json", with_json, "emit JSON (default on)");
  app.add_flag("--svg", with_svg, "emit SVG files (needs --out)");

  CLI::App* figures_cmd = app.add_subcommand("figures", "emit the built-in figure catalog");
  figures_cmd->add_option("selector", selector, "all or fig3..fig16");
  CLI::App* polytope_cmd = app.add_subcommand("polytope", "analyze an instance polytope");
  CLI::App* dual_cmd = app.add_subcommand("dual", "analyze the dual of an instance polytope");
  CLI::App* pconv_cmd = app.add_subcommand("pconv", "point-convex hull of instance elements");
  CLI::App* valuation_cmd = app.add_subcommand("valuation", "valuation of an algebra expression");
  valuation_cmd->add_option("--expr", expr, "expression, e.g. \"x1*x2 - y1^2 - 1\"");
  CLI::App* cox_cmd = app.add_subcommand("cox", "run the full recompute-and-verify report");
  CLI::App* points_cmd = app.add_subcommand("points", "point-space utilities");
  CLI::App* check_axiom_cmd =
      points_cmd->add_subcommand("check-axiom", "test the min-additivity axiom for raw triples");

  CLI11_PARSE(app, argc, argv);
  g_emit_json = with_json;

  try {
    if (figures_cmd->parsed()) {
      std::string dir = out_dir.empty() ? "figures" : out_dir;
      return run_figures(selector, dir, true);
    }
    if (polytope_cmd->parsed() || dual_cmd->parsed()) {
      if (instance_path.empty()) {
        std::cerr << "--instance is required\n";
        return kExitInputError;
      }
      return run_polytope(load_instance(instance_path), dual_cmd->parsed(), out_dir, with_svg);
    }
    if (pconv_cmd->parsed()) {
      if (instance_path.empty()) {
        std::cerr << "--instance is required\n";
        return kExitInputError;
      }
      return run_pconv(load_instance(instance_path), out_dir);
    }
    if (valuation_cmd->parsed()) {
      if (expr.empty() && !instance_path.empty()) {
        Instance inst = load_instance(instance_path);
        expr = inst.expr;
        s_value = inst.s;
      }
      if (expr.empty()) {
        std::cerr << "--expr (or an instance with \"expr\") is required\n";
        return kExitInputError;
      }
      return run_valuation(expr, s_value, out_dir);
    }
    if (cox_cmd->parsed()) {
      if (instance_path.empty()) {
        std::cerr << "--instance is required\n";
        return kExitInputError;
      }
      return run_cox(load_instance(instance_path), out_dir);
    }
    if (points_cmd->parsed() && check_axiom_cmd->parsed()) {
      if (instance_path.empty()) {
        std::cerr << "--instance is required\n";
        return kExitInputError;
      }
      return run_check_axiom(load_instance(instance_path, /*validate_points=*/false), out_dir);
    }
    std::cerr << "no subcommand\n";
    return kExitInputError;
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position << ": " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
