#include <doctest.h>

#include "support.hpp"
#include "surfcluster/cluster.hpp"
#include "surfcluster/error.hpp"

using namespace surfcluster;
using testsupport::one;
using testsupport::var;

namespace {

// Max-plus shadow of a subtraction-free Laurent polynomial at x.
Rational shadow(const LaurentPoly& p, const Triangulation& t, const VectorXq& x) {
  bool first = true;
  Rational best = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += Rational(e[i], 2) * x(t.index_of(p.vars()[i]));
    if (first || s > best) best = s;
    first = false;
  }
  return best;
}

Rational shadow(const Fraction& f, const Triangulation& t, const VectorXq& x) {
  return shadow(f.num(), t, x) - shadow(f.den(), t, x);
}

bool positive_integral(const LaurentPoly& p) {
  for (const auto& [e, c] : p.terms())
    if (c <= 0 || !is_integer(c)) return false;
  return true;
}

}  // namespace

TEST_CASE("square X mutation") {
  auto t = testsupport::square();
  const int k = t.edges[t.interior_edges()[0]].id;
  std::vector<int> v = t.ids();
  Chart c = symbolic_chart(t, ChartKind::X);
  ChartMutation m = mutate_x(c, k);
  const int k2 = m.relabel.at(k);
  LaurentPoly xk = var(v, k);
  // Sides 0 and 2 sit counterclockwise from the diagonal, 1 and 3 clockwise.
  CHECK(m.chart.at_id(0) == Fraction(var(v, 0) * (one(v) + xk)));
  CHECK(m.chart.at_id(2) == Fraction(var(v, 2) * (one(v) + xk)));
  CHECK(m.chart.at_id(1) == Fraction(var(v, 1) * xk, one(v) + xk));
  CHECK(m.chart.at_id(3) == Fraction(var(v, 3) * xk, one(v) + xk));
  CHECK(m.chart.at_id(k2) == Fraction(var(v, k, -1)));

  NumericChart n = numeric_chart(t, ChartKind::X, {{0, 2}, {1, 1}, {2, 1}, {3, 1}, {k, 3}});
  NumericMutation nm = mutate_x(n, k);
  CHECK(nm.chart.at_id(nm.relabel.at(k)) == Rational(1, 3));
  CHECK(nm.chart.at_id(0) == 8);
}

TEST_CASE("square A mutation is the Ptolemy relation") {
  auto t = testsupport::square();
  const int k = t.edges[t.interior_edges()[0]].id;
  std::vector<int> v = t.ids();
  ChartMutation m = mutate_a(symbolic_chart(t, ChartKind::A), k);
  CHECK(m.chart.at_id(m.relabel.at(k)) ==
        Fraction((var(v, 0) * var(v, 2) + var(v, 1) * var(v, 3)) * var(v, k, -1)));
  for (int id : {0, 1, 2, 3}) CHECK(m.chart.at_id(id) == Fraction(var(v, id)));
}

TEST_CASE("mutation errors") {
  auto t = testsupport::square();
  Chart c = symbolic_chart(t, ChartKind::X);
  CHECK_THROWS_AS(mutate_x(c, 0), Error);
  CHECK_THROWS_AS(mutate_a(c, 4), Error);
  try {
    mutate_x(c, 42);
    FAIL("expected UnknownEdge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownEdge);
  }
}

TEST_CASE("double mutation is the identity") {
  for (const auto& t : {testsupport::square(), testsupport::pentagon(), testsupport::annulus(), testsupport::pants()})
    for (ChartKind kind : {ChartKind::X, ChartKind::A}) {
      Chart c0 = symbolic_chart(t, kind);
      for (int e : t.interior_edges()) {
        const int id = t.edges[e].id;
        ChartMutation m1 = mutate(c0, id);
        ChartMutation m2 = mutate(m1.chart, m1.relabel.at(id));
        for (int f = 0; f < t.num_edges(); ++f)
          CHECK(m2.chart.at_id(m2.relabel.at(m1.relabel.at(t.edges[f].id))) == c0.values[f]);
      }
    }
}

TEST_CASE("pentagon periodicity") {
  auto t = testsupport::pentagon();
  auto inner = t.interior_edges();
  for (ChartKind kind : {ChartKind::X, ChartKind::A}) {
    Chart c0 = symbolic_chart(t, kind), c = c0;
    for (int s = 0; s < 5; ++s) c = mutate(c, c.tri.edges[inner[s % 2]].id).chart;
    auto match = match_triangulations(t, c.tri);
    REQUIRE_FALSE(match.empty());
    for (int e = 0; e < t.num_edges(); ++e) CHECK(c.values[match[e]] == c0.values[e]);
  }
}

TEST_CASE("Laurent phenomenon on the annulus") {
  auto t = testsupport::annulus();
  Chart c = symbolic_chart(t, ChartKind::A);
  auto inner = t.interior_edges();
  for (int depth = 0; depth < 6; ++depth) {
    c = mutate_a(c, c.tri.edges[inner[depth % 2]].id).chart;
    for (const auto& f : c.values) {
      REQUIRE(f.is_laurent());
      CHECK(positive_integral(f.laurent()));
    }
  }
}

TEST_CASE("tropical mutations") {
  auto t = testsupport::square();
  const int k = t.edges[t.interior_edges()[0]].id;
  const int kp = t.interior_edges()[0];
  auto g = testsupport::rng(21);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int s = 0; s < 100; ++s) {
    VectorXq x(5);
    for (int i = 0; i < 5; ++i) x(i) = d(g);
    x(kp) = 0;
    TropicalMutation m = mutate_x_tropical({t, x}, k);
    CHECK(m.vec.entries == x);
  }
  VectorXq zero = VectorXq::Zero(5);
  CHECK(mutate_a_tropical({t, zero}, k).vec.entries == zero);
  VectorXq a(5);
  a << 1, 1, 1, 1, 0;
  a(kp) = 0;
  CHECK(mutate_a_tropical({t, a}, k).vec.entries(kp) == 2);
}

TEST_CASE("tropical mutations are involutive and shadow the symbolic ones") {
  auto g = testsupport::rng(22);
  std::uniform_int_distribution<int> d(-3, 3);
  for (const auto& t : {testsupport::square(), testsupport::pentagon(), testsupport::annulus()}) {
    Chart cx = symbolic_chart(t, ChartKind::X), ca = symbolic_chart(t, ChartKind::A);
    for (int s = 0; s < 40; ++s) {
      VectorXq x(t.num_edges());
      for (int i = 0; i < x.size(); ++i) x(i) = d(g);
      for (int e : t.interior_edges()) {
        const int id = t.edges[e].id;
        TropicalMutation mx = mutate_x_tropical({t, x}, id), ma = mutate_a_tropical({t, x}, id);
        CHECK(mutate_x_tropical(mx.vec, mx.relabel.at(id)).vec.entries == x);
        CHECK(mutate_a_tropical(ma.vec, ma.relabel.at(id)).vec.entries == x);
        ChartMutation sx = mutate_x(cx, id), sa = mutate_a(ca, id);
        for (int f = 0; f < t.num_edges(); ++f) {
          CHECK(shadow(sx.chart.values[f], t, x) == mx.vec.entries(f));
          CHECK(shadow(sa.chart.values[f], t, x) == ma.vec.entries(f));
        }
      }
    }
  }
}

TEST_CASE("evaluation commutes with mutation") {
  auto g = testsupport::rng(23);
  std::uniform_int_distribution<int> d(1, 7);
  for (const auto& t : {testsupport::square(), testsupport::pentagon(), testsupport::annulus()})
    for (ChartKind kind : {ChartKind::X, ChartKind::A}) {
      Chart c = symbolic_chart(t, kind);
      for (int s = 0; s < 20; ++s) {
        std::map<int, Rational> point;
        for (int id : t.ids()) point[id] = Rational(d(g), d(g));
        NumericChart n = evaluate(c, point);
        for (int e : t.interior_edges()) {
          const int id = t.edges[e].id;
          ChartMutation sm = mutate(c, id);
          NumericMutation nm = kind == ChartKind::X ? mutate_x(n, id) : mutate_a(n, id);
          CHECK(evaluate(sm.chart, point).values == nm.chart.values);
        }
      }
    }
}

TEST_CASE("Poisson brackets of X variables") {
  auto t = testsupport::square();
  std::vector<int> v = t.ids();
  const int k = t.edges[t.interior_edges()[0]].id;
  CHECK(poisson_bracket_x(k, k, t).is_zero());
  CHECK(poisson_bracket_x(k, 0, t) == var(v, k) * var(v, 0));
  CHECK(poisson_bracket_x(0, k, t) == -(var(v, k) * var(v, 0)));

  auto h = testsupport::hexagon();
  ExchangeData ed = exchange_data(h);
  int zero_pairs = 0;
  for (int a = 0; a < h.num_edges(); ++a)
    for (int b = 0; b < h.num_edges(); ++b) {
      if (ed.epsilon(a, b) != 0) continue;
      ++zero_pairs;
      CHECK(poisson_bracket_x(h.edges[a].id, h.edges[b].id, h).is_zero());
    }
  CHECK(zero_pairs > h.num_edges());
}
