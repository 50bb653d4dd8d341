#pragma once

// The figure catalog behind the `figures` command.  Each figure packages one
// worked picture: canonical vertex data as JSON plus one SVG per chart image.
//
//   fig3        the three-element set S in both charts (s = 1)
//   fig4..fig6  the three half-spaces of the s = 1 quadrilateral example
//   fig7, fig8  that example's polytope and its dual
//   fig9        the point-convex hull of S
//   fig10,fig11 the s = 1 pentagon/hexagon example and its dual
//   fig12..14   the s = 2, 3, 4 examples with their duals
//   fig15,fig16 the s = 1 example whose dual is not integral, and that dual

#include "polyptych/gallery.hpp"
#include "polyptych/json_io.hpp"
#include "polyptych/svg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace polyptych {

struct FigureOutput {
  std::string id;
  Json json;
  std::vector<std::pair<std::string, std::string>> svgs;  // filename -> content
};

namespace detail {

inline Json polytope_json(const PLPolytope& P) {
  Json j;
  Json cons = Json::array();
  for (const PLHalfSpace& h : P.constraints)
    cons.push_back(Json{{"point", json_of(h.p)}, {"threshold", json_of(h.bound)}});
  j["constraints"] = cons;
  j["compact"] = P.compact();
  if (P.compact()) {
    j["chart1_vertices"] = json_of(P.chart_polygon(ChartId::chart1));
    j["chart2_vertices"] = json_of(P.chart_polygon(ChartId::chart2));
    Json vp = Json::array();
    for (const ElementR& m : pl_vertices(P)) vp.push_back(json_of(m.c1));
    j["vertices_chart1"] = vp;
    j["integral"] = is_integral(P.chart_polygon(ChartId::chart1)) &&
                    is_integral(P.chart_polygon(ChartId::chart2));
    j["chart_gorenstein_fano"] = is_chart_gorenstein_fano(P);
  }
  return j;
}

inline Json dual_json(const PLPolytope& dual) {
  Json j = polytope_json(dual);
  const ConvexPolygon& c1 = dual.chart_polygon(ChartId::chart1);
  const ConvexPolygon& c2 = dual.chart_polygon(ChartId::chart2);
  j["charts_identical"] = c1 == c2;
  if (is_integral(c1) && is_integral(c2))
    j["charts_lattice_equivalent"] = lattice_equivalent(c1, c2);
  for (const ConvexPolygon* poly : {&c1, &c2})
    for (const Vec2& v : poly->verts)
      if (!is_integer(v.x) || !is_integer(v.y)) {
        j["nonintegral_witness"] = json_of(v);
        break;
      }
  return j;
}

inline std::pair<std::string, std::string> chart_svg(const std::string& name, ChartId chart,
                                                     const PLPolytope& P) {
  ChartDrawing d;
  d.shape = P.chart_polygon(chart);
  return {name + (chart == ChartId::chart1 ? "_chart1.svg" : "_chart2.svg"),
          render_chart_svg(d)};
}

inline void add_polytope_svgs(FigureOutput& out, const std::string& name, const PLPolytope& P) {
  out.svgs.push_back(chart_svg(name, ChartId::chart1, P));
  out.svgs.push_back(chart_svg(name, ChartId::chart2, P));
}

inline FigureOutput polytope_figure(const std::string& id, const GalleryInstance& g) {
  FigureOutput out;
  out.id = id;
  PLPolytope P = gallery_polytope(g);
  out.json["figure"] = id;
  out.json["kind"] = "polytope";
  out.json["s"] = g.s;
  out.json["instance"] = g.name;
  out.json["polytope"] = polytope_json(P);
  add_polytope_svgs(out, id, P);
  return out;
}

inline FigureOutput dual_figure(const std::string& id, const GalleryInstance& g) {
  FigureOutput out;
  out.id = id;
  PLPolytope dual = dual_polytope(gallery_polytope(g));
  out.json["figure"] = id;
  out.json["kind"] = "dual";
  out.json["s"] = g.s;
  out.json["instance"] = g.name;
  out.json["dual"] = dual_json(dual);
  add_polytope_svgs(out, id, dual);
  return out;
}

inline FigureOutput pair_figure(const std::string& id, const GalleryInstance& g) {
  FigureOutput out;
  out.id = id;
  PLPolytope P = gallery_polytope(g);
  PLPolytope dual = dual_polytope(P);
  out.json["figure"] = id;
  out.json["kind"] = "polytope-with-dual";
  out.json["s"] = g.s;
  out.json["instance"] = g.name;
  out.json["polytope"] = polytope_json(P);
  out.json["dual"] = dual_json(dual);
  add_polytope_svgs(out, id + "_p", P);
  add_polytope_svgs(out, id + "_dual", dual);
  return out;
}

inline FigureOutput halfspace_figure(const std::string& id, const GalleryInstance& g,
                                     std::size_t index) {
  FigureOutput out;
  out.id = id;
  ShearParam s{g.s};
  PointTriple p = gallery_points(g)[index];
  PLHalfSpace h{p, Rational(-1)};
  out.json["figure"] = id;
  out.json["kind"] = "halfspace";
  out.json["s"] = g.s;
  out.json["instance"] = g.name;
  out.json["point"] = json_of(p);
  out.json["threshold"] = json_of(h.bound);
  for (ChartId chart : kCharts) {
    Region r = halfspace_chart_image(s, h, chart);
    std::string key = chart == ChartId::chart1 ? "chart1" : "chart2";
    out.json[key] = json_of(r);
    ChartDrawing d;
    d.shape = clip_region_to_box(r, -3, 3, -3, 3);
    d.true_boundary = r.halves;
    out.svgs.push_back({id + "_" + key + ".svg", render_chart_svg(d)});
  }
  return out;
}

}  // namespace detail

inline std::vector<std::string> figure_ids() {
  return {"fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9",
          "fig10", "fig11", "fig12", "fig13", "fig14", "fig15", "fig16"};
}

inline FigureOutput make_figure(const std::string& id) {
  const GalleryInstance& set_s = gallery_instance("pconv-set");
  const GalleryInstance& ex1 = gallery_instance("gf-s1-quad");

  if (id == "fig3") {
    FigureOutput out;
    out.id = id;
    ShearParam s{set_s.s};
    out.json["figure"] = id;
    out.json["kind"] = "element-set";
    out.json["s"] = set_s.s;
    out.json["instance"] = set_s.name;
    Json e = Json::array();
    for (const Element& m : gallery_elements(set_s))
      e.push_back(Json::array({static_cast<long long>(m.c1.x), static_cast<long long>(m.c1.y)}));
    out.json["elements"] = e;
    for (ChartId chart : kCharts) {
      Json pts = Json::array();
      ChartDrawing d;
      for (const Element& m : gallery_elements(set_s)) {
        Vec2 v = to_rational(m.chart(s, chart));
        pts.push_back(json_of(v));
        d.marks.push_back(v);
      }
      std::string key = chart == ChartId::chart1 ? "chart1" : "chart2";
      out.json[key + "_points"] = pts;
      out.svgs.push_back({id + "_" + key + ".svg", render_chart_svg(d)});
    }
    return out;
  }
  if (id == "fig4") return detail::halfspace_figure(id, ex1, 0);
  if (id == "fig5") return detail::halfspace_figure(id, ex1, 1);
  if (id == "fig6") return detail::halfspace_figure(id, ex1, 2);
  if (id == "fig7") return detail::polytope_figure(id, ex1);
  if (id == "fig8") return detail::dual_figure(id, ex1);
  if (id == "fig9") {
    FigureOutput out;
    out.id = id;
    ShearParam s{set_s.s};
    std::vector<Element> S = gallery_elements(set_s);
    PLPolytope hull = point_convex_hull(s, S);
    out.json["figure"] = id;
    out.json["kind"] = "pconv";
    out.json["s"] = set_s.s;
    out.json["instance"] = set_s.name;
    Json e = Json::array();
    for (const Element& m : S)
      e.push_back(Json::array({static_cast<long long>(m.c1.x), static_cast<long long>(m.c1.y)}));
    out.json["elements"] = e;
    Json cons = Json::array();
    for (const PLHalfSpace& h : hull.constraints)
      cons.push_back(Json{{"point", json_of(h.p)}, {"threshold", json_of(h.bound)}});
    out.json["constraints"] = cons;
    out.json["chart1_vertices"] = json_of(hull.chart_polygon(ChartId::chart1));
    out.json["chart2_vertices"] = json_of(hull.chart_polygon(ChartId::chart2));
    // The chart-1 image strictly contains the classical hull of the chart-1
    // point set.
    std::vector<Vec2> pts1;
    for (const Element& m : S) pts1.push_back(to_rational(m.c1));
    ConvexPolygon classical = polygon_from_points(pts1);
    bool contains_all = true;
    for (const Vec2& v : classical.verts)
      if (!polygon_contains(hull.chart_polygon(ChartId::chart1), v)) contains_all = false;
    out.json["chart1_strictly_contains_classical_hull"] =
        contains_all && !(hull.chart_polygon(ChartId::chart1) == classical);
    for (ChartId chart : kCharts) {
      ChartDrawing d;
      d.shape = hull.chart_polygon(chart);
      for (const Element& m : S) d.marks.push_back(to_rational(m.chart(s, chart)));
      out.svgs.push_back(
          {id + (chart == ChartId::chart1 ? "_chart1.svg" : "_chart2.svg"), render_chart_svg(d)});
    }
    return out;
  }
  if (id == "fig10") return detail::polytope_figure(id, gallery_instance("gf-s1-hex"));
  if (id == "fig11") return detail::dual_figure(id, gallery_instance("gf-s1-hex"));
  if (id == "fig12") return detail::pair_figure(id, gallery_instance("gf-s2"));
  if (id == "fig13") return detail::pair_figure(id, gallery_instance("gf-s3"));
  if (id == "fig14") return detail::pair_figure(id, gallery_instance("gf-s4"));
  if (id == "fig15") return detail::polytope_figure(id, gallery_instance("nonintegral-dual"));
  if (id == "fig16") return detail::dual_figure(id, gallery_instance("nonintegral-dual"));
  throw Error("unknown figure selector: " + id);
}

}  // namespace polyptych
