#include <doctest.h>

#include <regex>

#include "support.hpp"
#include "surfcluster/ensemble.hpp"
#include "surfcluster/error.hpp"
#include "surfcluster/lamination.hpp"
#include "surfcluster/wilson.hpp"

using namespace surfcluster;

namespace {

std::vector<Triangulation> unpunctured() {
  return {testsupport::square(), testsupport::pentagon(), testsupport::hexagon(), testsupport::annulus(),
          testsupport::pants(), initial_triangulation(new_surface(1, 0, {2}))};
}

Exponent minus_a(const Triangulation& t, const VectorXq& a) {
  auto vars = x_variables(t);
  Exponent e(vars.size(), 0);
  for (int i = 0; i < t.num_edges(); ++i) {
    Rational d = -2 * a(i);
    e[std::lower_bound(vars.begin(), vars.end(), t.edges[i].id) - vars.begin()] =
        static_cast<int>(boost::multiprecision::numerator(d));
  }
  return e;
}

using Num2 = Eigen::Matrix<Rational, 2, 2>;

// Loop transfer matrix at X_id = root(id)^2, built from the explicit
// H, E^L, E^R matrices.
Num2 numeric_loop(const TurningWord& w, const Triangulation& t, const std::map<int, Rational>& root) {
  Num2 m = Num2::Identity(), el, er;
  el << 1, 1, 0, 1;
  er << 1, 0, 1, 1;
  for (std::size_t i = 0; i < w.turns.size(); ++i) {
    const Rational r = root.at(t.edges[w.edges[i]].id);
    Num2 h;
    h << r, 0, 0, 1 / r;
    m = m * (w.turns[i] == 'L' ? el : er) * h;
  }
  return m;
}

Curve core_loop(const Triangulation& t) {
  for (const auto& c : enumerate_curves(t, 3))
    if (c.loop) return c;
  FAIL("no loop found");
  return {};
}

}  // namespace

TEST_CASE("turning patterns") {
  for (const auto& t : unpunctured())
    for (int e = 0; e < t.num_edges(); ++e) {
      TurningWord w = turning_pattern(b_shift_edge(e, t), t);
      CHECK_FALSE(w.loop);
      CHECK(w.edges.size() == w.turns.size() + 1);
      CHECK(std::regex_match(w.turns, std::regex("L*R*")));
      // A corner arc turns once in each triangle corner at its point.
      if (t.is_boundary(e)) CHECK(w.turns.size() == t.corners_at_special(t.edges[e].mminus).size());
    }
  auto a = testsupport::annulus();
  TurningWord w = turning_pattern(core_loop(a), a);
  CHECK(w.loop);
  CHECK(w.edges.size() == 2);
  CHECK(w.turns.size() == 2);
}

TEST_CASE("the empty path is H") {
  auto t = testsupport::square();
  auto vars = x_variables(t);
  for (int b : t.boundary_edges()) {
    TurningWord w{false, {b}, ""};
    Matrix2 g = wilson_line(w, t);
    CHECK(g == h_matrix(vars, t.edges[b].id));
    CHECK(delta22(g) == LaurentPoly::monomial(vars, [&] {
            Exponent e(vars.size(), 0);
            e[b] = -1;
            return e;
          }()));
  }
}

TEST_CASE("Wilson lines of shifted edges") {
  for (const auto& t : unpunctured()) {
    auto vars = x_variables(t);
    auto pullback = ensemble_pullback(t);
    for (int e = 0; e < t.num_edges(); ++e) {
      Curve c = b_shift_edge(e, t);
      Matrix2 g = wilson_line(turning_pattern(c, t), t);
      VectorXq a = a_coords(ALamination{{{c, 1}}}, t).entries;
      CHECK(delta22(g) == LaurentPoly::monomial(vars, minus_a(t, a)));
      CHECK(substitute_monomial(delta22(g), pullback) == LaurentPoly::variable(vars, t.edges[e].id));
    }
  }
}

TEST_CASE("Wilson lines are unimodular with unit lowest term") {
  for (const auto& t : unpunctured()) {
    auto vars = x_variables(t);
    for (const auto& c : enumerate_curves(t, 3)) {
      if (c.loop) {
        CHECK(determinant(loop_matrix(turning_pattern(c, t), t)) == LaurentPoly::constant(1, vars));
        continue;
      }
      Matrix2 g = wilson_line(turning_pattern(c, t), t);
      CHECK(determinant(g) == LaurentPoly::constant(1, vars));
      VectorXq a = a_coords(ALamination{{{c, 1}}}, t).entries;
      CHECK(lowest_exponent(delta22(g)) == minus_a(t, a));
      CHECK(lowest_term(delta22(g)).terms().begin()->second == 1);
    }
  }
}

TEST_CASE("annulus core loop traces") {
  auto t = testsupport::annulus();
  auto vars = x_variables(t);
  Curve c = core_loop(t);
  TurningWord w = turning_pattern(c, t);
  VectorXq a = a_coords(ALamination{{{c, 1}}}, t).entries;

  std::map<int, Rational> ones, root, point;
  for (int id : t.ids()) ones[id] = 1;
  CHECK(eval_positive(trace_monodromy(w, 1, t), ones) == numeric_loop(w, t, ones).trace());
  CHECK(eval_positive(trace_monodromy(w, 1, t), ones) == 3);
  auto g = testsupport::rng(41);
  std::uniform_int_distribution<int> d(1, 5);
  for (int s = 0; s < 20; ++s) {
    for (int id : t.ids()) {
      root[id] = Rational(d(g), d(g));
      point[id] = root[id] * root[id];
    }
    Num2 m = numeric_loop(w, t, root);
    for (int p = 1; p <= 3; ++p) {
      Num2 mp = Num2::Identity();
      for (int i = 0; i < p; ++i) mp = mp * m;
      CHECK(eval_positive(trace_monodromy(w, p, t), point) == mp.trace());
    }
  }

  LaurentPoly t1 = trace_monodromy(w, 1, t);
  CHECK(trace_monodromy(w, 2, t) == t1 * t1 - LaurentPoly::constant(2, vars));
  for (int p = 1; p <= 3; ++p) {
    LaurentPoly tr = trace_monodromy(w, p, t);
    CHECK(lowest_exponent(tr) == minus_a(t, a * Rational(p)));
    CHECK(lowest_term(tr).terms().begin()->second == 1);
  }
}

TEST_CASE("traces are invariant under rotation of the loop word") {
  for (const auto& t : {testsupport::annulus(), testsupport::pants(), initial_triangulation(new_surface(1, 0, {2}))})
    for (const auto& c : enumerate_curves(t, 4)) {
      if (!c.loop) continue;
      TurningWord w = turning_pattern(c, t);
      LaurentPoly base = trace_monodromy(w, 1, t);
      for (std::size_t r = 1; r < w.turns.size(); ++r) {
        TurningWord rot = w;
        std::rotate(rot.edges.begin(), rot.edges.begin() + r, rot.edges.end());
        std::rotate(rot.turns.begin(), rot.turns.begin() + r, rot.turns.end());
        CHECK(trace_monodromy(rot, 1, t) == base);
      }
      CHECK(trace_monodromy(w, 2, t) == base * base - LaurentPoly::constant(2, x_variables(t)));
    }
}

TEST_CASE("monodromy needs a loop") {
  auto t = testsupport::square();
  TurningWord w = turning_pattern(b_shift_edge(4, t), t);
  try {
    trace_monodromy(w, 1, t);
    FAIL("expected NotLoop");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotLoop);
  }
}
