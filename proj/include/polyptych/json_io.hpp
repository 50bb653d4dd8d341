#pragma once

// JSON serialization and the instance file format.
//
// Rational values always serialize as canonical strings ("n" or "p/q") so no
// precision is lost; structurally integer fields (s, exponents, offsets) are
// bare JSON numbers.  Output is dumped with sorted keys and fixed indent, so
// identical inputs produce byte-identical documents.

#include "polyptych/algebra.hpp"
#include "polyptych/cox.hpp"
#include "polyptych/plconvex.hpp"
#include "polyptych/points.hpp"
#include "polyptych/polygon.hpp"

#include <json.hpp>

#include <fstream>
#include <string>
#include <vector>

namespace polyptych {

using Json = nlohmann::ordered_json;

inline Json json_of(const Rational& q) { return to_string(q); }

inline Json json_of(const Vec2& v) { return Json::array({json_of(v.x), json_of(v.y)}); }

inline Json json_of(const PointTriple& p) {
  return Json::array({json_of(p.a), json_of(p.b), json_of(p.c)});
}

inline Json json_of(const ConvexPolygon& p) {
  Json verts = Json::array();
  for (const Vec2& v : p.verts) verts.push_back(json_of(v));
  return verts;
}

inline Json json_of(const HalfPlane& h) {
  return Json{{"normal", json_of(h.normal)}, {"bound", json_of(h.bound)}};
}

inline Json json_of(const Region& r) {
  Json j;
  switch (r.kind) {
    case Region::Kind::empty: j["kind"] = "empty"; break;
    case Region::Kind::bounded:
      j["kind"] = "bounded";
      j["vertices"] = json_of(r.polygon);
      break;
    case Region::Kind::unbounded: j["kind"] = "unbounded"; break;
  }
  Json halves = Json::array();
  for (const HalfPlane& h : r.halves) halves.push_back(json_of(h));
  j["halfplanes"] = halves;
  return j;
}

inline Json json_of(ShearParam s, const Monomial& m) {
  Json j;
  j["text"] = detail::monomial_str(s, m);
  j["w"] = Json::array({m.w1, m.w2});
  j["z1"] = m.z1;
  j["t"] = m.t;
  return j;
}

inline Json json_of(ShearParam s, const AlgebraElement& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms) {
    Json t = json_of(s, m);
    t["coeff"] = json_of(c);
    terms.push_back(t);
  }
  return terms;
}

inline std::string element_str(ShearParam s, const AlgebraElement& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms) {
    Rational k = c;
    if (out.empty()) {
      if (k < 0) {
        out += "-";
        k = -k;
      }
    } else {
      out += k < 0 ? " - " : " + ";
      if (k < 0) k = -k;
    }
    std::string mono = detail::monomial_str(s, m);
    if (mono == "1") out += to_string(k);
    else out += (k == 1 ? "" : to_string(k) + "*") + mono;
  }
  return out;
}

inline Json json_of(const IneqSystem& sys) {
  Json rows = Json::array();
  for (const IntVec& r : sys.rows) {
    Json row = Json::array();
    for (const Int& x : r) row.push_back(x.str());
    rows.push_back(row);
  }
  return Json{{"n", sys.n}, {"rows", rows}};
}

inline Json json_of(const IntMat& m) {
  Json out = Json::array();
  for (const IntVec& r : m) {
    Json row = Json::array();
    for (const Int& x : r) row.push_back(x.str());
    out.push_back(row);
  }
  return out;
}

inline Json json_of(const CoxReport& rep) {
  ShearParam s{rep.s};
  Json j;
  j["s"] = rep.s;
  Json pts = Json::array();
  for (const PointTriple& p : rep.points) pts.push_back(json_of(p));
  j["points"] = pts;
  j["unit_generator"] = detail::monomial_str(s, rep.unit);
  Json ords = Json::array();
  for (const Int& o : rep.unit_orders) ords.push_back(o.str());
  j["unit_order_vector"] = ords;
  j["ideal_generator"] = element_str(s, rep.ideal_generator);
  j["t1"] = json_of(rep.t1);
  j["t2"] = json_of(rep.t2);
  j["t1_hilbert_basis"] = json_of(rep.basis1);
  j["t2_hilbert_basis"] = json_of(rep.basis2);
  j["t1_oracle"] = Json{{"ok", rep.oracle1.ok}, {"detail", rep.oracle1.detail}};
  j["t2_oracle"] = Json{{"ok", rep.oracle2.ok}, {"detail", rep.oracle2.detail}};
  Json gens = Json::array();
  for (std::size_t i = 0; i < rep.generators.size(); ++i) {
    Json g = json_of(s, rep.generators[i]);
    g["symbol"] = "W" + std::to_string(i + 1);
    gens.push_back(g);
  }
  j["generators"] = gens;
  Json rels = Json::array();
  for (const RelationVerdict& r : rep.relations)
    rels.push_back(Json{{"word", r.word},
                        {"zero_before_quotient", r.zero_before_quotient},
                        {"zero", r.zero_in_quotient},
                        {"normal_form", element_str(s, r.normal_form)}});
  j["relations"] = rels;
  Json ones = Json::array();
  for (std::size_t i : rep.generators_mapping_to_one) ones.push_back("W" + std::to_string(i + 1));
  j["generators_mapping_to_one"] = ones;
  j["presentation"] = Json{{"generators", rep.presentation_generators},
                           {"relations", rep.presentation_relations}};
  Json disc = Json::array();
  for (const Discrepancy& d : rep.discrepancies)
    disc.push_back(Json{{"claim", d.claim}, {"recomputed", d.recomputed}});
  j["discrepancies"] = disc;
  j["matches_reference_instance"] = rep.matches_reference_instance;
  return j;
}

// ---------------------------------------------------------------------------
// Instance files.

struct Instance {
  long long s = 1;
  std::vector<PointTriple> points;
  std::vector<Rational> thresholds;    // same length as points; default -1
  std::vector<Element> elements;       // optional
  std::string expr;                    // optional
};

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error("expected an integer or a rational string");
}

inline Instance parse_instance(const Json& j, bool validate_points = true) {
  Instance inst;
  if (!j.contains("s") || !j["s"].is_number_integer())
    throw Error("instance requires an integer field \"s\"");
  inst.s = j["s"].get<long long>();
  if (inst.s < 1) throw Error("instance field \"s\" must be >= 1");
  ShearParam s{inst.s};
  if (j.contains("points")) {
    for (const Json& p : j["points"]) {
      if (!p.is_array() || p.size() != 3) throw Error("each point must be a triple");
      Rational a = rational_from_json(p[0]), b = rational_from_json(p[1]),
               c = rational_from_json(p[2]);
      inst.points.push_back(validate_points ? point_from_triple(s, a, b, c)
                                            : PointTriple{a, b, c});
    }
  }
  if (j.contains("thresholds")) {
    for (const Json& t : j["thresholds"]) inst.thresholds.push_back(rational_from_json(t));
    if (inst.thresholds.size() != inst.points.size())
      throw Error("thresholds and points must have the same length");
  } else {
    inst.thresholds.assign(inst.points.size(), Rational(-1));
  }
  if (j.contains("elements")) {
    for (const Json& e : j["elements"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw Error("each element must be an integer pair");
      inst.elements.push_back({Vec2I{Int(e[0].get<long long>()), Int(e[1].get<long long>())}});
    }
  }
  if (j.contains("expr")) inst.expr = j["expr"].get<std::string>();
  return inst;
}

inline Instance load_instance(const std::string& path, bool validate_points = true) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open instance file: " + path);
  Json j = Json::parse(in, nullptr, true, true);
  return parse_instance(j, validate_points);
}

inline PLPolytope instance_polytope(const Instance& inst) {
  ShearParam s{inst.s};
  std::vector<PLHalfSpace> hs;
  for (std::size_t i = 0; i < inst.points.size(); ++i)
    hs.push_back({inst.points[i], inst.thresholds[i]});
  return pl_polytope(s, hs);
}

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace polyptych
