#include <doctest.h>

#include <functional>
#include <string>

#include "support.hpp"
#include "surfcluster/error.hpp"
#include "surfcluster/json_io.hpp"
#include "surfcluster/lamination.hpp"

using namespace surfcluster;
using io::json;

namespace {

std::string schema_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
    return e.what();
  }
  FAIL("expected InvalidInput");
  return {};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("rationals") {
  for (const Rational& r : {Rational(0), Rational(3), Rational(-7, 2), Rational(5, 12)}) {
    CHECK(io::rational_from_json(io::to_json(r)) == r);
    CHECK(io::rational_from_json(io::rational_object(r)) == r);
  }
  CHECK(io::to_json(Rational(-7, 2)) == "-7/2");
  CHECK(io::rational_from_json(json(4)) == 4);
  CHECK(contains(schema_error([] { io::rational_from_json(json::array()); }), "expected a rational"));
}

TEST_CASE("surfaces and triangulations round trip") {
  for (const auto& t : {testsupport::square(), testsupport::annulus(), testsupport::pants(), testsupport::two_triangles(),
                        initial_triangulation(new_surface(0, 1, {2})), initial_triangulation(new_surface(1, 0, {2}))}) {
    CHECK(io::surface_from_json(io::to_json(t.surface)) == t.surface);
    json j = io::to_json(t);
    CHECK(io::to_json(io::triangulation_from_json(j)) == j);
  }
}

TEST_CASE("polynomials, charts and vectors round trip") {
  auto g = testsupport::rng(71);
  std::vector<int> v{0, 3, 7};
  for (int s = 0; s < 50; ++s) {
    LaurentPoly p = testsupport::random_poly(g, v, 4);
    CHECK(io::poly_from_json(io::to_json(p)) == p);
    LaurentPoly den = testsupport::random_poly(g, v, 1) + testsupport::one(v);
    if (den.is_zero()) continue;
    Fraction f(p, den);
    CHECK(io::fraction_from_json(io::to_json(f)) == f);
  }
  auto t = testsupport::square();
  Chart c = mutate(symbolic_chart(t, ChartKind::X), 4).chart;
  Chart back = io::chart_from_json(io::to_json(c));
  CHECK(back.kind == c.kind);
  CHECK(back.values == c.values);

  std::map<int, Rational> vals;
  for (int id : t.ids()) vals[id] = Rational(id + 1, 3);
  NumericChart n = numeric_chart(t, ChartKind::A, vals);
  CHECK(io::numeric_chart_from_json(io::to_json(n)).values == n.values);

  VectorXq x(5);
  x << 1, -2, Rational(1, 2), 0, 3;
  CHECK(io::vector_from_json(io::to_json(TropicalVector{t, x})).entries == x);
}

TEST_CASE("laminations round trip") {
  auto g = testsupport::rng(72);
  std::uniform_int_distribution<int> d(-2, 2);
  for (const auto& t : {testsupport::square(), testsupport::annulus(), testsupport::pentagon()}) {
    for (int s = 0; s < 30; ++s) {
      VectorXq v(t.num_edges());
      for (int i = 0; i < v.size(); ++i) v(i) = d(g);
      PLamination lam = reconstruct_from_shear({t, v});
      PLamination back = io::plamination_from_json(io::to_json(lam, t), t);
      CHECK(shear_coords(back, t).entries == v);
      CHECK(back.nu == lam.nu);
      VectorXq a = v.cwiseMax(VectorXq::Zero(v.size()));
      ALamination al = alamination_from_a({t, a});
      CHECK(a_coords(io::alamination_from_json(io::to_json(al, t), t), t).entries == a);
    }
    for (const auto& c : enumerate_curves(t, 3)) CHECK(same_curve(io::curve_from_json(io::curve_to_json(c, t), t), c));
  }
}

TEST_CASE("schema errors carry a JSON pointer") {
  json j = io::to_json(testsupport::square());
  j["edges"][1]["id"] = "one";
  CHECK(contains(schema_error([&] { io::triangulation_from_json(j); }), "at /edges/1/id: expected an integer"));

  json k = io::to_json(testsupport::square());
  k["edges"][0].erase("kind");
  CHECK(contains(schema_error([&] { io::triangulation_from_json(k); }), "at /edges/0/kind: missing field"));

  CHECK(contains(schema_error([] { io::triangulation_from_json(json(3)); }), "at /: expected an object"));

  auto t = testsupport::square();
  json lam = io::to_json(PLamination{}, t);
  lam["nu"] = json::array();
  CHECK(contains(schema_error([&] { io::plamination_from_json(lam, t); }), "at /nu:"));
}
