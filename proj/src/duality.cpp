#include "surfcluster/duality.hpp"

#include <algorithm>

#include "surfcluster/cluster.hpp"
#include "surfcluster/ensemble.hpp"
#include "surfcluster/error.hpp"
#include "surfcluster/gluing.hpp"
#include "surfcluster/wilson.hpp"

namespace surfcluster {

namespace {

void require_unpunctured(const Triangulation& t) {
  if (t.surface.is_punctured())
    throw Error(ErrorKind::PuncturedSurfaceUnsupported, "duality maps are defined here for unpunctured surfaces");
}

int integer_weight(const Rational& w, const char* what) {
  if (!is_integer(w)) throw Error(ErrorKind::NotIntegral, std::string(what) + " " + to_string(w) + " is not an integer");
  return static_cast<int>(boost::multiprecision::numerator(w));
}

}  // namespace

std::vector<int> a_variables(const Triangulation& t) { return x_variables(t); }

LaurentPoly I_A(const ALamination& lam, const Triangulation& t) {
  require_unpunctured(t);
  if (!is_integral(a_coords(lam, t))) throw Error(ErrorKind::NotIntegral, "a-coordinates are not integral");
  auto vars = x_variables(t);
  LaurentPoly r = LaurentPoly::constant(1, vars);
  for (const auto& wc : merge_components(lam.components)) {
    validate_curve(wc.curve, t);
    int w = integer_weight(wc.weight, "weight");
    TurningWord word = turning_pattern(wc.curve, t);
    if (wc.curve.loop) {
      if (w < 0) throw Error(ErrorKind::InvalidInput, "negative weight on a loop");
      r *= trace_monodromy(word, w, t);
      continue;
    }
    if (w < 0 && !is_peripheral(wc.curve, t)) throw Error(ErrorKind::InvalidInput, "negative weight on an arc");
    r *= pow(delta22(wilson_line(word, t)), w);
  }
  return r;
}

LaurentPoly arc_lambda_length(const Curve& ideal_arc, const Triangulation& t) {
  auto vars = a_variables(t);
  if (ideal_arc.is_edge()) return LaurentPoly::variable(vars, t.edges[ideal_arc.along_edge].id);
  FlipPath path = flip_path_to_arc(ideal_arc, t);
  Chart c = symbolic_chart(t, ChartKind::A);
  for (int id : path.flips) c = mutate_a(c, id).chart;
  return c.values[path.edge].laurent().with_vars(vars);
}

LaurentPoly I_X(const PLamination& lam, const Triangulation& t) {
  require_unpunctured(t);
  auto vars = a_variables(t);
  LaurentPoly r = LaurentPoly::constant(1, vars);
  std::map<int, LaurentPoly> pullback;
  for (const auto& wc : merge_components(lam.components)) {
    validate_curve(wc.curve, t);
    int w = integer_weight(wc.weight, "weight");
    if (w < 0) throw Error(ErrorKind::InvalidInput, "negative weight");
    if (wc.curve.loop) {
      if (pullback.empty()) pullback = ensemble_pullback(t);
      LaurentPoly tr = trace_monodromy(turning_pattern(wc.curve, t), w, t);
      r *= substitute_monomial(tr, pullback).with_vars(vars);
      continue;
    }
    if (has_vertex_end(wc.curve)) throw Error(ErrorKind::InvalidInput, "P-lamination arcs end on the boundary here");
    r *= pow(arc_lambda_length(m_shift(wc.curve, t), t), w);
  }
  for (const auto& [id, nu] : lam.nu) {
    if (!t.is_boundary(t.index_of(id))) throw Error(ErrorKind::InvalidInput, "pinning on an interior edge");
    r *= LaurentPoly::variable(vars, id, integer_weight(nu, "pinning"));
  }
  return r;
}

bool check_ensemble_compatibility(const ALamination& lam, const Triangulation& t) {
  LaurentPoly lhs = substitute_monomial(I_A(lam, t), ensemble_pullback(t));
  LaurentPoly rhs = I_X(dual_tropical_ensemble(lam, t), t);
  return lhs == rhs;
}

AmalgamationReport check_bracelet_amalgamation(const PLamination& lam, const Triangulation& t, int left_id,
                                               int right_id) {
  Rational nl = lam.nu.count(left_id) ? lam.nu.at(left_id) : Rational(0);
  Rational nr = lam.nu.count(right_id) ? lam.nu.at(right_id) : Rational(0);
  GluedLamination g = dual_glue_tropical(lam, t, left_id, right_id);
  const Triangulation& t2 = g.glue.tri;
  require_unpunctured(t2);
  auto vars2 = a_variables(t2);

  std::map<int, LaurentPoly> res;
  for (int id : a_variables(t)) res.emplace(id, LaurentPoly::variable(vars2, g.glue.edge_map.at(id)));

  AmalgamationReport rep;
  rep.glue = g.glue;
  rep.restricted = substitute_monomial(I_X(lam, t), res).with_vars(vars2);
  rep.glued = I_X(g.lam, t2);
  rep.equal = rep.restricted == rep.glued;
  if (nl + nr < 0)
    rep.status = AmalgamationStatus::NegativePinningSum;
  else
    rep.status = rep.equal ? AmalgamationStatus::Holds : AmalgamationStatus::Fails;

  if (rep.restricted.is_monomial()) {
    LaurentPoly inv = pow(rep.restricted, -1);
    for (const auto& [ex, c] : rep.glued.terms()) {
      LaurentPoly q = LaurentPoly::monomial(vars2, ex, c) * inv;
      const auto& [qe, qc] = *q.terms().begin();
      bool ok = qc == 1;
      for (std::size_t i = 0; i < qe.size() && ok; ++i)
        if (qe[i] != 0 && !t2.is_boundary(t2.index_of(vars2[i]))) ok = false;
      if (ok) rep.frozen_quotients.push_back(q);
    }
  }
  return rep;
}

int polynomial_rank(const std::vector<LaurentPoly>& family) {
  std::vector<int> vars;
  for (const auto& p : family) vars = merge_vars(vars, p.vars());
  // Echelon rows keyed by their largest exponent, leading coefficient 1.
  std::map<Exponent, std::map<Exponent, Rational>> rows;
  for (const auto& p : family) {
    std::map<Exponent, Rational> r = p.with_vars(vars).terms();
    while (!r.empty()) {
      auto lead = std::prev(r.end());
      auto piv = rows.find(lead->first);
      if (piv == rows.end()) break;
      Rational f = lead->second;
      for (const auto& [e, c] : piv->second) {
        Rational v = r[e] - f * c;
        if (v == 0)
          r.erase(e);
        else
          r[e] = v;
      }
    }
    if (r.empty()) continue;
    Rational lc = std::prev(r.end())->second;
    for (auto& [e, c] : r) c /= lc;
    Exponent key = std::prev(r.end())->first;
    rows.emplace(std::move(key), std::move(r));
  }
  return static_cast<int>(rows.size());
}

bool linearly_independent(const std::vector<LaurentPoly>& family) {
  return polynomial_rank(family) == static_cast<int>(family.size());
}

bool basis_independence(const std::vector<PLamination>& family, const Triangulation& t) {
  std::vector<LaurentPoly> polys;
  for (const auto& l : family) polys.push_back(I_X(l, t));
  return linearly_independent(polys);
}

bool basis_independence(const std::vector<ALamination>& family, const Triangulation& t) {
  std::vector<LaurentPoly> polys;
  for (const auto& l : family) polys.push_back(I_A(l, t));
  return linearly_independent(polys);
}

}  // namespace surfcluster
