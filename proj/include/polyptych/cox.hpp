#pragma once

// The total-coordinate-ring pipeline for a compact full-dimensional PL
// polytope cut out at thresholds -1 by integer points p_1..p_l: vanishing
// orders along the boundary divisors, the unit-relation ideal, the two
// section semigroups, their Hilbert bases, the assembled generator monomials
// with W-symbol bindings, exact relation verification in the Laurent algebra
// and its quotient, and a recompute-and-compare report against the shipped
// reference data for the standard s = 1 instance.
//
// Everything here recomputes from scratch; reference values are treated as
// claims to check, never as truth.

#include "polyptych/algebra.hpp"
#include "polyptych/expr.hpp"
#include "polyptych/hilbert.hpp"
#include "polyptych/plconvex.hpp"
#include "polyptych/points.hpp"
#include "polyptych/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polyptych {

struct CoxInstance {
  ShearParam s;
  std::vector<PointTriple> points;  // integer triples; thresholds are all -1
  PLPolytope polytope;
};

inline CoxInstance cox_instance(ShearParam s, const std::vector<PointTriple>& points) {
  std::vector<PLHalfSpace> hs;
  for (const PointTriple& p : points) {
    if (!p.is_integral()) throw NotIntegral("divisor points must be integer triples");
    hs.push_back({p, Rational(-1)});
  }
  PLPolytope P = pl_polytope(s, hs);
  if (!P.compact()) throw NotCompact("the instance polytope must be compact");
  if (P.chart_polygon(ChartId::chart1).dimension() != 2)
    throw DegenerateInput("the instance polytope must be full-dimensional");
  return {s, points, std::move(P)};
}

// Vanishing order of a t-free basis monomial along the divisor of p_i:
// evaluate the point at the monomial's exponent vector.
inline Int ord_along(const CoxInstance& inst, const PointTriple& p, const Monomial& m) {
  if (!m.t.empty()) throw DomainViolation("ord_along expects a t-free monomial");
  Rational v = evaluate_on_mvec(inst.s, p, mvec_of_monomial(inst.s, m));
  return numerator(v);
}

inline std::vector<Int> ord_vector(const CoxInstance& inst, const Monomial& m) {
  std::vector<Int> out;
  for (const PointTriple& p : inst.points) out.push_back(ord_along(inst, p, m));
  return out;
}

// Generators of the unit-relation ideal: u - t^{ord(u)} for the unit-group
// generator u.
inline std::vector<AlgebraElement> unit_ideal(const CoxInstance& inst) {
  Monomial u = unit_generator(inst.s);
  std::vector<Int> d = ord_vector(inst, u);
  std::vector<long long> t;
  for (const Int& x : d) t.push_back(static_cast<long long>(x));
  AlgebraElement gen = algebra_monomial(u);
  gen.add_term(monomial(0, 0, 0, t), -1);
  return {gen};
}

// The semigroup of basis monomials b_m t^rbar lying in the section ring,
// restricted to one piece of the element model.  Coordinates are
// (w, z1, r1..rl): piece 1 fixes w1 = 0 and writes w = w2, piece 2 fixes
// w2 = 0 and writes w = w1.
inline IneqSystem section_semigroup(const CoxInstance& inst, ChartId piece) {
  std::size_t l = inst.points.size();
  IneqSystem sys{2 + l, {}};
  IntVec nonneg(2 + l, 0);
  nonneg[0] = 1;
  sys.rows.push_back(nonneg);
  for (std::size_t j = 0; j < l; ++j) {
    const PointTriple& p = inst.points[j];
    Int a = numerator(p.a), b = numerator(p.b), c = numerator(p.c);
    IntVec row(2 + l, 0);
    row[0] = piece == ChartId::chart1 ? b - inst.s.s * c : a;
    row[1] = -c;
    row[2 + j] = 1;
    sys.rows.push_back(row);
  }
  return sys;
}

inline Monomial monomial_of_section_vector(const CoxInstance& /*inst*/, ChartId piece,
                                           const IntVec& v) {
  long long w = static_cast<long long>(v[0]);
  long long z1 = static_cast<long long>(v[1]);
  std::vector<long long> t;
  for (std::size_t i = 2; i < v.size(); ++i) t.push_back(static_cast<long long>(v[i]));
  return piece == ChartId::chart1 ? monomial(0, w, z1, std::move(t))
                                  : monomial(w, 0, z1, std::move(t));
}

// Deterministic generator order used in every report: total x-degree
// descending, then w2 descending, then t-monomials (z1 = 0) before unit
// multiples, then z1 descending, then t-exponents lexicographically
// descending.
inline bool report_order(const Monomial& a, const Monomial& b) {
  long long xa = a.w1 + a.w2, xb = b.w1 + b.w2;
  if (xa != xb) return xa > xb;
  if (a.w2 != b.w2) return a.w2 > b.w2;
  bool za = a.z1 == 0, zb = b.z1 == 0;
  if (za != zb) return za;
  if (a.z1 != b.z1) return a.z1 > b.z1;
  return a.t > b.t;
}

inline std::vector<Monomial> cox_generators(const CoxInstance& inst) {
  std::vector<Monomial> gens;
  for (ChartId piece : kCharts) {
    IneqSystem sys = section_semigroup(inst, piece);
    for (const IntVec& v : hilbert_basis(sys))
      gens.push_back(monomial_of_section_vector(inst, piece, v));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::sort(gens.begin(), gens.end(), report_order);
  return gens;
}

// Normal form modulo the unit ideal: rewrite y1 y2^{-1} |-> t^{ord}, shifting
// the t-exponents of every monomial by z1 * ord and clearing z1.  Monomials
// stay canonical, so no further reduction is required.
inline AlgebraElement reduce_mod_unit_ideal(const CoxInstance& inst, const AlgebraElement& f) {
  std::vector<Int> d = ord_vector(inst, unit_generator(inst.s));
  AlgebraElement out;
  for (const auto& [m, c] : f.terms) {
    std::vector<long long> t = m.t;
    if (t.size() < d.size()) t.resize(d.size(), 0);
    for (std::size_t i = 0; i < d.size(); ++i) t[i] += m.z1 * static_cast<long long>(d[i]);
    out.add_term(monomial(m.w1, m.w2, 0, std::move(t)), c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Formal words in the generator symbols W1..W9.

struct Word {
  // exponent vector over the bound symbols -> coefficient
  std::map<std::vector<long long>, Rational> terms;
  std::size_t arity = 0;
};

inline Word parse_word(const std::string& text, std::size_t arity) {
  Word w;
  w.arity = arity;
  detail::ExprCursor cur{text};
  bool first = true;
  while (!cur.done()) {
    Rational sgn(1);
    if (cur.eat('-')) sgn = -1;
    else if (cur.eat('+')) sgn = 1;
    else if (!first) throw ParseError(cur.pos, "expected '+' or '-'");
    first = false;

    Rational coeff = sgn;
    std::vector<long long> expo(arity, 0);
    bool have = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coeff *= cur.integer();
      have = true;
    }
    for (;;) {
      char c = cur.peek();
      if (c == '*') {
        cur.eat('*');
        c = cur.peek();
      }
      if (c != 'W') break;
      ++cur.pos;
      long long idx = cur.integer();
      if (idx < 1 || static_cast<std::size_t>(idx) > arity)
        throw UnboundSymbol("symbol W" + std::to_string(idx) + " is not bound");
      long long e = 1;
      if (cur.eat('^')) e = cur.integer();
      if (e < 0) throw ParseError(cur.pos, "negative powers of generator symbols");
      expo[static_cast<std::size_t>(idx - 1)] += e;
      have = true;
    }
    if (!have) throw ParseError(cur.pos, "expected a term");
    auto [it, inserted] = w.terms.emplace(expo, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) w.terms.erase(it);
    }
  }
  if (first) throw ParseError(0, "empty word");
  return w;
}

inline std::string render_word(const Word& w) {
  if (w.terms.empty()) return "0";
  std::string out;
  // Iterate in reverse so higher exponent vectors print first.
  for (auto it = w.terms.rbegin(); it != w.terms.rend(); ++it) {
    const auto& [expo, coeff] = *it;
    Rational c = coeff;
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    std::string mono;
    for (std::size_t i = 0; i < expo.size(); ++i) {
      if (expo[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "W" + std::to_string(i + 1);
      if (expo[i] != 1) mono += "^" + std::to_string(expo[i]);
    }
    if (mono.empty()) out += to_string(c);
    else out += (c == 1 ? "" : to_string(c) + "*") + mono;
  }
  return out;
}

inline AlgebraElement evaluate_word(ShearParam s, const Word& w,
                                    const std::vector<Monomial>& bindings) {
  AlgebraElement out;
  for (const auto& [expo, coeff] : w.terms) {
    AlgebraElement term = scale(algebra_one(), coeff);
    for (std::size_t i = 0; i < expo.size(); ++i)
      for (long long k = 0; k < expo[i]; ++k)
        term = multiply(s, term, algebra_monomial(bindings[i]));
    out = add(out, term);
  }
  return out;
}

// Substitutes 1 for the listed symbols (used to express relations in the
// reduced presentation).
inline Word eliminate_symbols(const Word& w, const std::vector<std::size_t>& ones) {
  Word out;
  out.arity = w.arity;
  for (const auto& [expo, coeff] : w.terms) {
    std::vector<long long> e = expo;
    for (std::size_t i : ones) e[i] = 0;
    auto [it, inserted] = out.terms.emplace(e, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

struct RelationVerdict {
  std::string word;
  bool zero_before_quotient = false;
  bool zero_in_quotient = false;
  AlgebraElement normal_form;  // after reduction mod the unit ideal
};

inline RelationVerdict relation_check(const CoxInstance& inst, const std::string& word,
                                      const std::vector<Monomial>& bindings) {
  Word w = parse_word(word, bindings.size());
  AlgebraElement value = evaluate_word(inst.s, w, bindings);
  AlgebraElement reduced = reduce_mod_unit_ideal(inst, value);
  return {word, value.is_zero(), reduced.is_zero(), reduced};
}

// ---------------------------------------------------------------------------
// Report.

struct Discrepancy {
  std::string claim;
  std::string recomputed;
};

struct CoxReport {
  long long s;
  std::vector<PointTriple> points;
  Monomial unit;
  std::vector<Int> unit_orders;
  AlgebraElement ideal_generator;
  IneqSystem t1, t2;
  IntMat basis1, basis2;
  HilbertOracleResult oracle1, oracle2;
  std::vector<Monomial> generators;  // W1..Wn in report order
  std::vector<RelationVerdict> relations;
  std::vector<std::size_t> generators_mapping_to_one;  // 0-based indices
  std::vector<std::string> presentation_generators;
  std::vector<std::string> presentation_relations;
  std::vector<Discrepancy> discrepancies;
  bool matches_reference_instance = false;

  bool oracles_ok() const { return oracle1.ok && oracle2.ok; }
};

namespace detail {

// The shipped reference data for the standard s = 1 instance with divisor
// points (1,-1,1), (-2,2,1), (1,-3,-2).
inline bool is_reference_instance(const CoxInstance& inst) {
  if (inst.s.s != 1 || inst.points.size() != 3) return false;
  std::vector<PointTriple> pts = inst.points;
  std::sort(pts.begin(), pts.end());
  std::vector<PointTriple> ref{{Rational(-2), Rational(2), Rational(1)},
                               {Rational(1), Rational(-3), Rational(-2)},
                               {Rational(1), Rational(-1), Rational(1)}};
  std::sort(ref.begin(), ref.end());
  return pts == ref;
}

inline std::string monomial_str(ShearParam s, const Monomial& m) {
  std::string out;
  auto pw = [&](const std::string& v, long long e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += v;
    if (e != 1) out += "^" + std::to_string(e);
  };
  pw("x1", m.w1);
  pw("x2", m.w2);
  pw("y1", m.z1);
  pw("y2", m.z2(s));
  for (std::size_t i = 0; i < m.t.size(); ++i) pw("t" + std::to_string(i + 1), m.t[i]);
  return out.empty() ? "1" : out;
}

inline std::string vec_str(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

}  // namespace detail

inline CoxReport verify_claims(const CoxInstance& inst) {
  CoxReport rep;
  rep.s = inst.s.s;
  rep.points = inst.points;
  rep.unit = unit_generator(inst.s);
  rep.unit_orders = ord_vector(inst, rep.unit);
  rep.ideal_generator = unit_ideal(inst).front();
  rep.t1 = section_semigroup(inst, ChartId::chart1);
  rep.t2 = section_semigroup(inst, ChartId::chart2);
  rep.basis1 = hilbert_basis(rep.t1);
  rep.basis2 = hilbert_basis(rep.t2);
  rep.oracle1 = hilbert_box_oracle(rep.t1, rep.basis1, 6);
  rep.oracle2 = hilbert_box_oracle(rep.t2, rep.basis2, 6);
  rep.generators = cox_generators(inst);
  rep.matches_reference_instance = detail::is_reference_instance(inst);

  // Generators that are 1 in the quotient, and inverse pairs, give the
  // automatic part of the presentation.
  std::vector<std::string> relation_words;
  for (std::size_t i = 0; i < rep.generators.size(); ++i) {
    AlgebraElement reduced =
        reduce_mod_unit_ideal(inst, algebra_monomial(rep.generators[i]));
    if (reduced == algebra_one()) {
      rep.generators_mapping_to_one.push_back(i);
      relation_words.push_back("W" + std::to_string(i + 1) + " - 1");
    }
  }
  for (std::size_t i = 0; i < rep.generators.size(); ++i)
    for (std::size_t j = i + 1; j < rep.generators.size(); ++j) {
      AlgebraElement prod = multiply(inst.s, algebra_monomial(rep.generators[i]),
                                     algebra_monomial(rep.generators[j]));
      if (prod == algebra_one())
        relation_words.push_back("W" + std::to_string(i + 1) + "*W" + std::to_string(j + 1) +
                                 " - 1");
    }
  if (rep.matches_reference_instance) {
    relation_words.push_back("W1*W2 - W5^2*W6 - W3*W4");
    relation_words.push_back("W5 - 1");                // reference kernel claim
    relation_words.push_back("W2*W3 - W1*W7 + W4");    // reference kernel claim
    relation_words.push_back("W2*W3 - W1*W5 + W4");    // reference presentation claim
  }
  for (const std::string& word : relation_words)
    rep.relations.push_back(relation_check(inst, word, rep.generators));

  // Reduced presentation: drop generators mapping to 1, keep the verified
  // relations rewritten without them.
  for (std::size_t i = 0; i < rep.generators.size(); ++i)
    if (std::find(rep.generators_mapping_to_one.begin(), rep.generators_mapping_to_one.end(),
                  i) == rep.generators_mapping_to_one.end())
      rep.presentation_generators.push_back("W" + std::to_string(i + 1));
  for (const RelationVerdict& r : rep.relations) {
    if (!r.zero_in_quotient) continue;
    Word w = eliminate_symbols(parse_word(r.word, rep.generators.size()),
                               rep.generators_mapping_to_one);
    std::string rendered = render_word(w);
    if (rendered == "0") continue;  // relation became trivial
    // keep only relations among the surviving generators
    if (std::find(rep.presentation_relations.begin(), rep.presentation_relations.end(),
                  rendered) == rep.presentation_relations.end())
      rep.presentation_relations.push_back(rendered);
  }

  if (rep.matches_reference_instance) {
    // Compare against the reference data and record mismatches with the
    // recomputed evidence.
    auto& d = rep.discrepancies;
    std::vector<Int> ref_ord{Int(-1), Int(-1), Int(2)};
    if (rep.unit_orders != ref_ord)
      d.push_back({"unit order vector (-1,-1,2)", "recomputed " + detail::vec_str(rep.unit_orders)});

    auto vecs = [](std::initializer_list<std::initializer_list<long long>> rows) {
      IntMat m;
      for (auto r : rows) {
        IntVec v;
        for (long long x : r) v.push_back(Int(x));
        m.push_back(v);
      }
      std::sort(m.begin(), m.end());
      return m;
    };
    auto sorted = [](IntMat m) {
      std::sort(m.begin(), m.end());
      return m;
    };
    if (sorted(rep.t1.rows) != vecs({{1, 0, 0, 0, 0}, {-2, -1, 1, 0, 0}, {1, -1, 0, 1, 0},
                                     {-1, 2, 0, 0, 1}}))
      d.push_back({"first section semigroup rows", "recomputed rows differ"});
    if (sorted(rep.t2.rows) != vecs({{1, 0, 0, 0, 0}, {1, -1, 1, 0, 0}, {-2, -1, 0, 1, 0},
                                     {1, 2, 0, 0, 1}}))
      d.push_back({"second section semigroup rows", "recomputed rows differ"});
    IntMat ref_basis = vecs({{1, 0, 2, -1, 1}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0},
                             {0, 0, 0, 0, 1}, {0, -1, -1, -1, 2}, {0, 1, 1, 1, -2}});
    if (sorted(rep.basis1) != ref_basis)
      d.push_back({"first Hilbert basis", "recomputed basis differs"});
    IntMat ref_basis2 = vecs({{1, 0, -1, 2, -1}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0},
                              {0, 0, 0, 0, 1}, {0, -1, -1, -1, 2}, {0, 1, 1, 1, -2}});
    if (sorted(rep.basis2) != ref_basis2)
      d.push_back({"second Hilbert basis", "recomputed basis differs"});
    std::vector<std::vector<long long>> ref_tdeg{{2, -1, 1}, {-1, 2, -1}, {1},      {0, 1},
                                                 {0, 0, 1},  {1, 1, -2},  {-1, -1, 2}};
    for (auto& t : ref_tdeg)
      while (!t.empty() && t.back() == 0) t.pop_back();
    std::sort(ref_tdeg.begin(), ref_tdeg.end());
    std::vector<std::vector<long long>> got_tdeg;
    for (const Monomial& g : rep.generators) got_tdeg.push_back(g.t);
    std::sort(got_tdeg.begin(), got_tdeg.end());
    if (got_tdeg != ref_tdeg)
      d.push_back({"generator t-degree list", "recomputed degrees differ"});

    // Printed first generator uses y1^{-1}; the printed semigroup vector
    // (1,0,2,-1,1) canonicalizes to the y2^{-1} monomial instead.
    Monomial printed = monomial(0, 1, -1, {2, -1, 1});
    Monomial recomputed = monomial(0, 1, 0, {2, -1, 1});
    bool have_printed = std::find(rep.generators.begin(), rep.generators.end(), printed) !=
                        rep.generators.end();
    bool have_recomputed = std::find(rep.generators.begin(), rep.generators.end(), recomputed) !=
                           rep.generators.end();
    if (!have_printed && have_recomputed)
      d.push_back({"generator printed as " + detail::monomial_str(inst.s, printed),
                   "the semigroup vector (1,0,2,-1,1) is the monomial " +
                       detail::monomial_str(inst.s, recomputed) +
                       "; the printed spelling has exponent vector (1,-1,2,-1,1), which fails "
                       "the second semigroup inequality"});

    for (const RelationVerdict& r : rep.relations) {
      if (r.word == "W5 - 1" && !r.zero_in_quotient)
        d.push_back({"kernel claim W5 - 1",
                     "W5 binds to t3, whose normal form is t3, not 1; recomputed kernel "
                     "elements of this shape are W6 - 1 and W7 - 1"});
      if (r.word == "W2*W3 - W1*W7 + W4" && !r.zero_in_quotient)
        d.push_back({"kernel claim W2*W3 - W1*W7 + W4", "nonzero in the quotient"});
      if (r.word == "W2*W3 - W1*W5 + W4" && !r.zero_in_quotient)
        d.push_back({"presentation relation W2*W3 - W1*W5 + W4", "nonzero in the quotient"});
    }
  }
  return rep;
}

}  // namespace polyptych
