#include <doctest.h>

#include "support.hpp"
#include "surfcluster/cluster.hpp"
#include "surfcluster/error.hpp"
#include "surfcluster/lamination.hpp"

using namespace surfcluster;

namespace {

PLamination single(const Curve& c, const Triangulation& t, Rational w = 1) {
  PLamination lam;
  lam.components.push_back({c, w});
  for (int b : t.boundary_edges()) lam.nu[t.edges[b].id] = 0;
  return lam;
}

// Integer vectors with entries in [-bound, bound]; exhaustive up to `limit`
// vectors, otherwise `limit` seeded samples.
std::vector<VectorXq> vectors(int n, int bound, long limit, std::uint64_t salt) {
  std::vector<VectorXq> out;
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 2 * bound + 1;
  if (total <= limit) {
    for (long code = 0; code < total; ++code) {
      VectorXq v(n);
      long c = code;
      for (int i = 0; i < n; ++i, c /= 2 * bound + 1) v(i) = static_cast<int>(c % (2 * bound + 1)) - bound;
      out.push_back(v);
    }
    return out;
  }
  auto g = testsupport::rng(salt);
  std::uniform_int_distribution<int> d(-bound, bound);
  for (long s = 0; s < limit; ++s) {
    VectorXq v(n);
    for (int i = 0; i < n; ++i) v(i) = d(g);
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("shear coordinates on the square") {
  auto t = testsupport::square();
  const int d = t.interior_edges()[0];

  PLamination empty;
  for (int b = 0; b < 4; ++b) empty.nu[b] = b + 1;
  VectorXq want(5);
  want << 1, 2, 3, 4, 0;
  CHECK(shear_coords(empty, t).entries == want);
  CHECK(dual_shear_coords(empty, t).entries == want);

  int z = 0, s = 0;
  for (const auto& c : enumerate_curves(t, 3)) {
    if (is_peripheral(c, t)) continue;
    PLamination one = single(c, t), two = single(c, t, 2);
    TropicalVector x = shear_coords(one, t);
    CHECK(shear_coords(two, t).entries == x.entries * Rational(2));
    CHECK(dual_shear_coords(one, t).entries(d) == x.entries(d));
    if (x.entries(d) == 1) ++z;
    if (x.entries(d) == -1) ++s;
  }
  // One curve crosses the quadrilateral in each of the two patterns.
  CHECK(z == 1);
  CHECK(s == 1);
}

TEST_CASE("corner arcs count with opposite signs in the two coordinates") {
  auto t = testsupport::square();
  Curve corner = b_shift_edge(0, t);  // around m- of interval 0
  REQUIRE(peripheral_point(corner, t) == t.edges[0].mminus);
  PLamination lam = single(corner, t);
  CHECK(dual_shear_coords(lam, t).entries(0) == 1);
  CHECK(shear_coords(lam, t).entries(0) == 0);
  CHECK_THROWS_AS(validate_lamination(lam, t), Error);
}

TEST_CASE("a-coordinates") {
  auto t = testsupport::square();
  Curve corner = b_shift_edge(0, t);
  ALamination p{{{corner, 1}}};
  TropicalVector a = a_coords(p, t);
  CHECK(a.entries(0) == Rational(1, 2));
  CHECK(a.entries(1) == Rational(1, 2));
  CHECK(a.entries(2) == 0);
  CHECK_FALSE(is_integral(a));
  ALamination p2{{{corner, 2}}};
  CHECK(a_coords(p2, t).entries == a.entries * Rational(2));
  CHECK(is_integral(a_coords(p2, t)));

  // a-coordinates are the intersection numbers with the edges.
  for (const auto& c : enumerate_curves(t, 3)) {
    TropicalVector v = a_coords(ALamination{{{c, 1}}}, t);
    for (int e = 0; e < 5; ++e) CHECK(v.entries(e) == intersection_number(e, c, t));
  }
}

TEST_CASE("reconstruction examples") {
  auto t = testsupport::square();
  const int d = t.interior_edges()[0];
  PLamination zero = reconstruct_from_shear({t, VectorXq::Zero(5)});
  CHECK(zero.components.empty());
  for (const auto& [id, nu] : zero.nu) CHECK(nu == 0);

  VectorXq v = VectorXq::Zero(5);
  v(d) = 1;
  PLamination one = reconstruct_from_shear({t, v});
  REQUIRE(one.components.size() == 1);
  CHECK(one.components[0].weight == 1);
  CHECK(shear_coords(single(one.components[0].curve, t), t).entries(d) == 1);
  CHECK(shear_coords(one, t).entries == v);

  VectorXq half = VectorXq::Zero(5);
  half(0) = Rational(1, 2);
  try {
    reconstruct_from_shear({t, half});
    FAIL("expected NonIntegerInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonIntegerInput);
  }
}

TEST_CASE("annulus core loop reconstruction") {
  auto t = testsupport::annulus();
  Curve core;
  for (const auto& c : enumerate_curves(t, 3))
    if (c.loop) core = c;
  REQUIRE(core.loop);
  TropicalVector x = shear_coords(single(core, t), t);
  // The loop crosses the two interior edges with opposite chirality.
  auto inner = t.interior_edges();
  CHECK(x.entries(inner[0]) == -x.entries(inner[1]));
  CHECK(x.entries(inner[0]) * x.entries(inner[0]) == 1);
  for (int b : t.boundary_edges()) CHECK(x.entries(b) == 0);
  PLamination back = reconstruct_from_shear(x);
  REQUIRE(back.components.size() == 1);
  CHECK(back.components[0].weight == 1);
  CHECK(same_curve(back.components[0].curve, core));

  // Equal signs give arcs, not the loop.
  VectorXq same = VectorXq::Zero(4);
  for (int e : inner) same(e) = 1;
  for (const auto& wc : reconstruct_from_shear({t, same}).components) CHECK_FALSE(wc.curve.loop);
}

TEST_CASE("shear of reconstruction is the identity") {
  struct Case {
    Triangulation t;
    int bound;
    long limit;
  };
  std::vector<Case> cases{{testsupport::square(), 2, 4000},
                          {testsupport::annulus(), 3, 3000},
                          {testsupport::pentagon(), 3, 400},
                          {testsupport::pants(), 2, 300}};
  for (auto& [t, bound, limit] : cases)
    for (const auto& v : vectors(t.num_edges(), bound, limit, 31)) {
      TropicalVector x{t, v};
      PLamination lam = reconstruct_from_shear(x);
      CHECK_NOTHROW(validate_lamination(lam, t));
      CHECK(shear_coords(lam, t).entries == v);
      CHECK(dual_shear_coords(reconstruct_from_dual_shear(x), t).entries == v);
    }
}

TEST_CASE("punctured reconstruction and spiral depth") {
  for (auto t : {initial_triangulation(new_surface(0, 1, {2})), initial_triangulation(new_surface(0, 1, {3}))})
    for (const auto& v : vectors(t.num_edges(), 2, 300, 32)) {
      PLamination lam = reconstruct_from_shear({t, v});
      CHECK(shear_coords(lam, t).entries == v);
      CHECK(shear_coords(lam, t, 4).entries == v);
    }
}

TEST_CASE("flips act on shear coordinates by tropical mutation") {
  for (const auto& t : {testsupport::square(), testsupport::annulus(), testsupport::pentagon(), testsupport::pants()})
    for (const auto& c : enumerate_curves(t, 3)) {
      if (is_peripheral(c, t)) continue;
      for (Rational nu : {Rational(0), Rational(2)}) {
        PLamination lam = single(c, t);
        for (auto& [id, x] : lam.nu) x = nu;
        for (int k : t.interior_edges()) {
          const int id = t.edges[k].id;
          FlipResult f = flip(t, id);
          PLamination r = renormalize(lam, t, id);
          CHECK(shear_coords(r, f.tri).entries == mutate_x_tropical(shear_coords(lam, t), id).vec.entries);
          CHECK(dual_shear_coords(r, f.tri).entries == mutate_x_tropical(dual_shear_coords(lam, t), id).vec.entries);
        }
      }
    }
}

TEST_CASE("flips act on a-coordinates by tropical A mutation") {
  for (const auto& t : {testsupport::square(), testsupport::annulus(), testsupport::pentagon()}) {
    auto cs = enumerate_curves(t, 3);
    for (const auto& c : cs)
      for (int k : t.interior_edges()) {
        const int id = t.edges[k].id;
        FlipResult f = flip(t, id);
        ALamination lam{{{c, 1}}};
        CHECK(a_coords(renormalize(lam, t, id), f.tri).entries ==
              mutate_a_tropical(a_coords(lam, t), id).vec.entries);
      }
  }
}

TEST_CASE("integer a-vectors trace back to A-laminations") {
  auto t = testsupport::square();
  for (const auto& v : vectors(5, 2, 4000, 33)) {
    VectorXq a = v;
    for (auto& x : a) x = x < 0 ? Rational(-x) : x;
    ALamination lam = alamination_from_a({t, a});
    CHECK(a_coords(lam, t).entries == a);
  }
}
