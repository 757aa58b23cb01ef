#include "surfcluster/verify.hpp"

#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "surfcluster/cluster.hpp"
#include "surfcluster/duality.hpp"
#include "surfcluster/ensemble.hpp"
#include "surfcluster/error.hpp"
#include "surfcluster/gluing.hpp"
#include "surfcluster/lamination.hpp"
#include "surfcluster/wilson.hpp"

namespace surfcluster {

namespace {

MarkedSurface single_surface(const std::string& name) {
  if (name == "triangle") return polygon_surface(3);
  if (name == "square" || name == "rectangle") return polygon_surface(4);
  if (name == "pentagon") return polygon_surface(5);
  if (name == "hexagon") return polygon_surface(6);
  if (name.rfind("polygon", 0) == 0) {
    try {
      return polygon_surface(std::stoi(name.substr(7)));
    } catch (const std::logic_error&) {
    }
  }
  if (name == "annulus") return new_surface(0, 0, {1, 1});
  if (name == "pants") return new_surface(0, 0, {1, 1, 1});
  if (name == "torus") return new_surface(1, 0, {2});
  throw Error(ErrorKind::InvalidInput, "unknown surface name '" + name + "'");
}

std::string show(const VectorXq& v) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v(i));
  os << ")";
  return os.str();
}

std::string show(const Triangulation& t, const VectorXq& v) {
  std::ostringstream os;
  os << "{";
  for (int e = 0; e < t.num_edges(); ++e) os << (e ? ", " : "") << t.edges[e].id << ": " << to_string(v(e));
  os << "}";
  return os.str();
}

// Integer vectors in [lo, hi]^n: all of them when few enough, otherwise a
// seeded sample. `body` returns false to stop.
void sweep(int n, int lo, int hi, const SuiteOptions& opt, const std::function<bool(const VectorXq&)>& body) {
  const long width = hi - lo + 1;
  long total = 1;
  bool exhaustive = true;
  for (int i = 0; i < n && exhaustive; ++i) {
    total *= width;
    if (total > opt.exhaustive_limit) exhaustive = false;
  }
  VectorXq v(n);
  if (exhaustive) {
    std::vector<int> digits(n, lo);
    while (true) {
      for (int i = 0; i < n; ++i) v(i) = digits[i];
      if (!body(v)) return;
      int i = 0;
      while (i < n && digits[i] == hi) digits[i++] = lo;
      if (i == n) return;
      ++digits[i];
    }
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> dist(lo, hi);
  for (long s = 0; s < opt.samples; ++s) {
    for (int i = 0; i < n; ++i) v(i) = dist(rng);
    if (!body(v)) return;
  }
}

void fail(SuiteResult& r, const std::string& what) {
  if (r.pass) r.counterexample = what;
  r.pass = false;
}

Exponent minus_a_exponent(const Triangulation& t, const TropicalVector& a, const std::vector<int>& vars) {
  Exponent e(vars.size(), 0);
  for (int i = 0; i < t.num_edges(); ++i) {
    Rational d = -2 * a.entries(i);
    e[std::lower_bound(vars.begin(), vars.end(), t.edges[i].id) - vars.begin()] =
        static_cast<int>(boost::multiprecision::numerator(d));
  }
  return e;
}

bool has_lowest(const LaurentPoly& p, const Exponent& e) {
  try {
    return lowest_exponent(p) == e && lowest_term(p).terms().begin()->second == 1;
  } catch (const Error&) {
    return false;
  }
}

PLamination single_curve(const Curve& c, const Triangulation& t) {
  PLamination lam;
  lam.components.push_back({c, 1});
  for (int e : t.boundary_edges()) lam.nu[t.edges[e].id] = 0;
  return lam;
}

SuiteResult suite_mutation(const Triangulation& t, const SuiteOptions& opt) {
  SuiteResult r;
  for (ChartKind kind : {ChartKind::X, ChartKind::A}) {
    Chart c0 = symbolic_chart(t, kind);
    for (int e : t.interior_edges()) {
      const int id = t.edges[e].id;
      ++r.cases;
      ChartMutation m1 = mutate(c0, id);
      ChartMutation m2 = mutate(m1.chart, m1.relabel.at(id));
      for (int f = 0; f < t.num_edges(); ++f) {
        int id2 = m2.relabel.at(m1.relabel.at(t.edges[f].id));
        if (m2.chart.at_id(id2) != c0.values[f])
          fail(r, std::string(kind == ChartKind::X ? "X" : "A") + "-chart: mutating twice at edge " +
                      std::to_string(id) + " changes the value at edge " + std::to_string(t.edges[f].id));
      }
    }
  }
  sweep(t.num_edges(), -opt.bound, opt.bound, opt, [&](const VectorXq& v) {
    TropicalVector x{t, v};
    for (int e : t.interior_edges()) {
      const int id = t.edges[e].id;
      ++r.cases;
      for (bool a_side : {false, true}) {
        auto m1 = a_side ? mutate_a_tropical(x, id) : mutate_x_tropical(x, id);
        auto m2 = a_side ? mutate_a_tropical(m1.vec, m1.relabel.at(id)) : mutate_x_tropical(m1.vec, m1.relabel.at(id));
        if (m2.vec.entries != v)
          fail(r, std::string("tropical ") + (a_side ? "a" : "x") + " mutation at edge " + std::to_string(id) +
                      " is not involutive on " + show(t, v));
      }
    }
    return r.pass;
  });
  return r;
}

SuiteResult suite_periodicity() {
  SuiteResult r;
  Triangulation t = initial_triangulation(polygon_surface(5));
  auto inner = t.interior_edges();
  for (ChartKind kind : {ChartKind::X, ChartKind::A}) {
    ++r.cases;
    Chart c0 = symbolic_chart(t, kind), c = c0;
    for (int s = 0; s < 5; ++s) c = mutate(c, c.tri.edges[inner[s % 2]].id).chart;
    std::vector<int> match = match_triangulations(t, c.tri);
    bool ok = !match.empty();
    for (int e = 0; e < t.num_edges() && ok; ++e) ok = c.values[match[e]] == c0.values[e];
    if (!ok) fail(r, std::string("five flips of the pentagon do not restore the ") + (kind == ChartKind::X ? "X" : "A") +
                         "-chart");
  }
  return r;
}

SuiteResult suite_inverse(const Triangulation& t) {
  SuiteResult r;
  r.cases = 1;
  ExchangeData ed = exchange_data(t);
  MatrixXq prod = q_matrix(t) * to_rational(ed.epsilon + ed.m);
  if (prod != MatrixXq::Identity(t.num_edges(), t.num_edges())) fail(r, "q (eps + m) is not the identity");
  return r;
}

SuiteResult suite_poisson(const Triangulation& t) {
  SuiteResult r;
  r.cases = 1;
  MatrixXq q = q_matrix(t);
  MatrixXq lhs = q * to_rational(exchange_data(t).epsilon) * q.transpose();
  MatrixXq rhs = muller_matrix(t) * Rational(-1, 4);
  if (lhs != rhs) fail(r, "q eps q^T differs from -pi/4");
  return r;
}

SuiteResult suite_wilson(const Triangulation& t, const SuiteOptions& opt) {
  SuiteResult r;
  auto vars = x_variables(t);
  auto pullback = ensemble_pullback(t);
  for (int e = 0; e < t.num_edges(); ++e) {
    ++r.cases;
    LaurentPoly d = delta22(wilson_line(turning_pattern(b_shift_edge(e, t), t), t));
    if (substitute_monomial(d, pullback) != LaurentPoly::variable(vars, t.edges[e].id))
      fail(r, "Delta22 of the shifted edge " + std::to_string(t.edges[e].id) + " does not pull back to A_" +
                  std::to_string(t.edges[e].id));
  }
  for (const Curve& c : enumerate_curves(t, opt.bound)) {
    if (c.loop) continue;
    ++r.cases;
    Matrix2 g = wilson_line(turning_pattern(c, t), t);
    ALamination one{{{c, 1}}};
    if (!has_lowest(delta22(g), minus_a_exponent(t, a_coords(one, t), vars)))
      fail(r, "lowest term of Delta22 is not prod X^-a for the arc with word " + format(delta22(g), "X"));
    if (determinant(g) != LaurentPoly::constant(1, vars)) fail(r, "Wilson line with determinant other than 1");
  }
  return r;
}

SuiteResult suite_roundtrip(const Triangulation& t, const SuiteOptions& opt) {
  SuiteResult r;
  sweep(t.num_edges(), -opt.bound, opt.bound, opt, [&](const VectorXq& v) {
    ++r.cases;
    TropicalVector x{t, v};
    if (shear_coords(reconstruct_from_shear(x), t).entries != v) fail(r, "shear(reconstruct(v)) != v for v = " + show(t, v));
    if (!t.surface.is_punctured() && dual_shear_coords(reconstruct_from_dual_shear(x), t).entries != v)
      fail(r, "dual shear(reconstruct(v)) != v for v = " + show(t, v));
    return r.pass;
  });
  return r;
}

SuiteResult suite_flip(const Triangulation& t, const SuiteOptions& opt) {
  SuiteResult r;
  for (const Curve& c : enumerate_curves(t, opt.bound)) {
    if (is_peripheral(c, t)) continue;
    PLamination lam = single_curve(c, t);
    TropicalVector x = shear_coords(lam, t);
    for (int e : t.interior_edges()) {
      const int id = t.edges[e].id;
      FlipResult f;
      try {
        f = flip(t, id);
      } catch (const Error&) {
        continue;
      }
      ++r.cases;
      TropicalVector after = shear_coords(renormalize(lam, t, id), f.tri);
      if (after.entries != mutate_x_tropical(x, id).vec.entries)
        fail(r, "flip at edge " + std::to_string(id) + " disagrees with tropical mutation for the curve with shear " +
                    show(t, x.entries));
    }
  }
  return r;
}

SuiteResult suite_gluing(const Triangulation& t, const SuiteOptions& opt) {
  SuiteResult r;
  auto [L, R] = default_glue_pair(t);
  sweep(t.num_edges(), -opt.bound, opt.bound, opt, [&](const VectorXq& v) {
    ++r.cases;
    PLamination lam = reconstruct_from_shear({t, v});
    for (bool dual : {false, true}) {
      auto coords = [&](const PLamination& l, const Triangulation& tt) {
        return dual ? dual_shear_coords(l, tt) : shear_coords(l, tt);
      };
      TropicalVector x = coords(lam, t);
      GluedVector want = glue_coords(x, L, R);
      GluedLamination viac = dual ? dual_glue_tropical(lam, t, L, R) : glue_tropical(lam, t, L, R);
      GluedLamination viap = glue_by_pins(lam, t, L, R, dual);
      const Triangulation& t2 = viac.glue.tri;
      TropicalVector xc = coords(viac.lam, t2), xp = coords(viap.lam, t2);
      const std::string tag = std::string(dual ? "dual " : "") + "gluing of " + show(t, v);
      if (xc.at_id(viac.glue.alpha_bar) != x.at_id(L) + x.at_id(R)) fail(r, tag + ": glued coordinate is not additive");
      for (int e : t2.interior_edges())
        if (xc.entries(e) != want.vec.entries(e)) fail(r, tag + ": interior coordinate moved");
      if (xp.entries != xc.entries) fail(r, tag + ": pin gluing " + show(xp.entries) + " vs coordinate gluing " +
                                                show(xc.entries));
    }
    return r.pass;
  });
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> dist(1, 9);
  for (long s = 0; s < std::min<long>(opt.samples, 200); ++s) {
    ++r.cases;
    std::map<int, Rational> vals;
    for (int id : t.ids()) vals[id] = Rational(dist(rng), dist(rng));
    GluedNumericChart g = glue_chart(numeric_chart(t, ChartKind::X, vals), L, R);
    if (g.chart.at_id(g.glue.alpha_bar) != vals[L] * vals[R]) fail(r, "numeric X gluing is not multiplicative");
    for (int id : t.ids())
      if (id != L && id != R && g.chart.at_id(g.glue.edge_map.at(id)) != vals[id])
        fail(r, "numeric X gluing moved the value at edge " + std::to_string(id));
  }
  return r;
}

SuiteResult suite_duality(const Triangulation& t, const SuiteOptions& opt) {
  SuiteResult r;
  sweep(t.num_edges(), 0, opt.bound, opt, [&](const VectorXq& v) {
    ++r.cases;
    ALamination lam = alamination_from_a({t, v});
    if (!check_ensemble_compatibility(lam, t)) fail(r, "p* I_A != I_X p^T for a = " + show(t, v));
    return r.pass;
  });
  return r;
}

SuiteResult suite_amalgamation(const Triangulation& t, const SuiteOptions& opt) {
  SuiteResult r;
  auto [L, R] = default_glue_pair(t);
  sweep(t.num_edges(), -opt.bound, opt.bound, opt, [&](const VectorXq& v) {
    ++r.cases;
    PLamination lam = reconstruct_from_shear({t, v});
    AmalgamationReport rep = check_bracelet_amalgamation(lam, t, L, R);
    if (rep.status == AmalgamationStatus::NegativePinningSum) ++r.skipped;
    if (rep.status == AmalgamationStatus::Fails)
      fail(r, "amalgamation fails for shear " + show(t, v) + ": " + format(rep.restricted, "A") + " vs " +
                  format(rep.glued, "A"));
    return r.pass;
  });
  return r;
}

SuiteResult suite_basis(const Triangulation& t, const SuiteOptions& opt) {
  SuiteResult r;
  std::vector<LaurentPoly> xs, as;
  auto vars = x_variables(t);
  std::set<std::vector<Rational>> seen;
  auto fresh = [&](const VectorXq& v) { return seen.insert(std::vector<Rational>(v.begin(), v.end())).second; };
  sweep(t.num_edges(), -opt.bound, opt.bound, opt, [&](const VectorXq& v) {
    if (!fresh(v)) return true;
    ++r.cases;
    xs.push_back(I_X(reconstruct_from_dual_shear({t, v}), t));
    return true;
  });
  if (!linearly_independent(xs)) fail(r, "I_X family with |dual coordinates| <= " + std::to_string(opt.bound) +
                                             " is linearly dependent");
  seen.clear();
  sweep(t.num_edges(), 0, opt.bound, opt, [&](const VectorXq& v) {
    if (!fresh(v)) return true;
    ++r.cases;
    TropicalVector a{t, v};
    LaurentPoly p = I_A(alamination_from_a(a), t);
    if (!has_lowest(p, minus_a_exponent(t, a, vars))) fail(r, "lowest term of I_A is not prod X^-a for a = " + show(t, v));
    as.push_back(p);
    return r.pass;
  });
  if (!linearly_independent(as)) fail(r, "I_A family with a <= " + std::to_string(opt.bound) + " is linearly dependent");
  return r;
}

SuiteResult suite_index2(const Triangulation& t) {
  SuiteResult r;
  r.cases = 1;
  Rational idx = integrality_index(t);
  if (idx != 2) fail(r, "integrality sublattice has index " + to_string(idx) + ", expected 2");
  return r;
}

}  // namespace

MarkedSurface named_surface(const std::string& name) {
  std::size_t plus = name.find('+');
  if (plus == std::string::npos) return single_surface(name);
  return disjoint_union(single_surface(name.substr(0, plus)), named_surface(name.substr(plus + 1)));
}

std::pair<int, int> default_glue_pair(const Triangulation& t) {
  auto component_of = [&](int point) {
    for (std::size_t c = 0; c < t.surface.components.size(); ++c)
      for (const auto& cyc : t.surface.components[c].boundary)
        if (std::find(cyc.begin(), cyc.end(), point) != cyc.end()) return static_cast<int>(c);
    return -1;
  };
  std::pair<int, int> same{-1, -1};
  for (int a : t.boundary_edges())
    for (int b : t.boundary_edges()) {
      if (a == b) continue;
      int ia = t.edges[a].id, ib = t.edges[b].id;
      try {
        if (!glue_surface(t, ia, ib).new_punctures.empty()) continue;
      } catch (const Error&) {
        continue;
      }
      if (component_of(t.edges[a].mplus) != component_of(t.edges[b].mplus)) return {ia, ib};
      if (same.first < 0) same = {ia, ib};
    }
  if (same.first < 0) throw Error(ErrorKind::InvalidInput, "no boundary intervals can be glued without a puncture");
  return same;
}

std::vector<std::string> suite_names() {
  return {"mutation", "periodicity", "inverse", "poisson", "wilson", "roundtrip",
          "flip", "gluing", "duality", "amalgamation", "basis", "index2"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "periodicity") return suite_periodicity();
  Triangulation t = initial_triangulation(named_surface(opt.surface));
  if (name == "mutation") return suite_mutation(t, opt);
  if (name == "inverse") return suite_inverse(t);
  if (name == "poisson") return suite_poisson(t);
  if (name == "wilson") return suite_wilson(t, opt);
  if (name == "roundtrip") return suite_roundtrip(t, opt);
  if (name == "flip") return suite_flip(t, opt);
  if (name == "gluing") return suite_gluing(t, opt);
  if (name == "duality") return suite_duality(t, opt);
  if (name == "amalgamation") return suite_amalgamation(t, opt);
  if (name == "basis") return suite_basis(t, opt);
  if (name == "index2") return suite_index2(t);
  throw Error(ErrorKind::InvalidInput, "unknown suite '" + name + "'");
}

}  // namespace surfcluster
