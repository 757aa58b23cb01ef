#include <doctest.h>

#include "support.hpp"
#include "surfcluster/ensemble.hpp"
#include "surfcluster/error.hpp"
#include "surfcluster/lamination.hpp"
#include "surfcluster/wilson.hpp"

using namespace surfcluster;
using testsupport::var;

namespace {

std::vector<Triangulation> unpunctured() {
  return {testsupport::square(),
          testsupport::pentagon(),
          testsupport::hexagon(),
          testsupport::annulus(),
          testsupport::pants(),
          testsupport::two_triangles(),
          initial_triangulation(new_surface(1, 0, {2})),
          initial_triangulation(new_surface(0, 0, {2, 1}))};
}

// Non-negative integer vectors with entries at most `bound`.
std::vector<VectorXq> box(int n, int bound) {
  std::vector<VectorXq> out;
  std::vector<int> dig(n, 0);
  while (true) {
    VectorXq v(n);
    for (int i = 0; i < n; ++i) v(i) = dig[i];
    out.push_back(v);
    int i = 0;
    while (i < n && dig[i] == bound) dig[i++] = 0;
    if (i == n) return out;
    ++dig[i];
  }
}

}  // namespace

TEST_CASE("ensemble pullback on the square") {
  auto t = testsupport::square();
  auto v = t.ids();
  auto pb = ensemble_pullback(t);
  CHECK(pb.at(4) == var(v, 0) * var(v, 2) * var(v, 1, -1) * var(v, 3, -1));
  // Boundary interval 1 sits in the triangle with sides 0, 1 and the diagonal.
  CHECK(pb.at(1) == var(v, 4) * var(v, 0, -1) * var(v, 1, -1));
}

TEST_CASE("boundary pullbacks have the shape A_b / (A_k A_a)") {
  for (const auto& t : unpunctured()) {
    auto pb = ensemble_pullback(t);
    for (int k : t.boundary_edges()) {
      const SideLocation loc = t.locate({k, 0});
      const int b = t.side_at(loc.tri, loc.pos + 1).edge, a = t.side_at(loc.tri, loc.pos + 2).edge;
      if (a == b || a == k || b == k) continue;
      auto v = t.ids();
      LaurentPoly want = var(v, t.edges[b].id) * var(v, t.edges[k].id, -1) * var(v, t.edges[a].id, -1);
      LaurentPoly swapped = var(v, t.edges[a].id) * var(v, t.edges[k].id, -1) * var(v, t.edges[b].id, -1);
      CHECK((pb.at(t.edges[k].id) == want || pb.at(t.edges[k].id) == swapped));
    }
  }
}

TEST_CASE("q inverts eps + m") {
  for (const auto& t : unpunctured()) {
    ExchangeData ed = exchange_data(t);
    MatrixXq q = q_matrix(t);
    const int n = t.num_edges();
    CHECK(q * to_rational(ed.epsilon + ed.m) == MatrixXq::Identity(n, n));
    // The corner arc at the terminal point ends on b once, or twice when b
    // is the only interval of its boundary component.
    for (int b : t.boundary_edges()) {
      const int ends = 1 + (t.interval_starting_at(t.edges[b].mminus) == b ? 1 : 0);
      CHECK(q(b, b) == Rational(-ends, 2));
    }
  }
}

TEST_CASE("the two monomial maps are inverse") {
  for (const auto& t : unpunctured()) {
    auto pb = ensemble_pullback(t), inv = inverse_a_from_x(t);
    auto v = t.ids();
    for (int id : v) {
      CHECK(substitute_monomial(pb.at(id), inv) == var(v, id));
      CHECK(substitute_monomial(inv.at(id), pb) == var(v, id));
    }
  }
}

TEST_CASE("punctured surfaces are refused") {
  auto t = initial_triangulation(new_surface(0, 1, {2}));
  try {
    q_matrix(t);
    FAIL("expected PuncturedSurfaceUnsupported");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PuncturedSurfaceUnsupported);
  }
}

TEST_CASE("Muller matrix and the A bracket") {
  for (const auto& t : unpunctured()) {
    MatrixXq q = q_matrix(t), pi = muller_matrix(t);
    ExchangeData ed = exchange_data(t);
    CHECK(pi == MatrixXq(-pi.transpose()));
    CHECK(q * to_rational(ed.epsilon) * q.transpose() == pi * Rational(-1, 4));
    auto v = t.ids();
    for (int a = 0; a < t.num_edges(); ++a)
      for (int b = 0; b < t.num_edges(); ++b) {
        const int ia = t.edges[a].id, ib = t.edges[b].id;
        LaurentPoly want = var(v, ia) * var(v, ib) * LaurentPoly::constant(pi(a, b) * Rational(-1, 4), v);
        CHECK(poisson_bracket_a(ia, ib, t) == want);
        const auto& ea = t.edges[a];
        const auto& eb = t.edges[b];
        bool shared = ea.mplus == eb.mplus || ea.mplus == eb.mminus || ea.mminus == eb.mplus || ea.mminus == eb.mminus;
        if (!shared) CHECK(pi(a, b) == 0);
      }
    CHECK(poisson_bracket_a(v[0], v[0], t).is_zero());
  }
  auto sq = testsupport::square();
  MatrixXq pi = muller_matrix(sq);
  CHECK((pi(4, 0) == 1 || pi(4, 0) == -1));
  CHECK(muller_matrix(sq, {4, 0})(0, 1) == pi(4, 0));
  CHECK_THROWS_AS(muller_matrix(sq, {4, 17}), Error);
}

TEST_CASE("tropical ensemble of peripheral arcs") {
  auto t = testsupport::square();
  for (int k : {1, 3}) {
    for (int p = 0; p < 4; ++p) {
      Curve corner = b_shift_edge(t.interval_ending_at(p), t);
      REQUIRE(peripheral_point(corner, t) == p);
      ALamination lam{{{corner, k}}};
      PLamination pl = tropical_ensemble(lam, t), dl = dual_tropical_ensemble(lam, t);
      CHECK(pl.components.empty());
      CHECK(dl.components.empty());
      const int plus = t.edges[t.interval_starting_at(p)].id, minus = t.edges[t.interval_ending_at(p)].id;
      CHECK(pl.nu.at(plus) == -k);
      CHECK(dl.nu.at(minus) == k);
    }
  }
}

TEST_CASE("tropical ensemble diagram") {
  for (const auto& t : {testsupport::square(), testsupport::annulus(), testsupport::pentagon()}) {
    ExchangeData ed = exchange_data(t);
    MatrixXq p = to_rational(ed.epsilon + ed.m), pd = to_rational(ed.epsilon - ed.m);
    const int bound = t.num_edges() > 5 ? 1 : 2;
    for (const VectorXq& a : box(t.num_edges(), bound)) {
      ALamination lam = alamination_from_a({t, a});
      REQUIRE(a_coords(lam, t).entries == a);
      CHECK(shear_coords(tropical_ensemble(lam, t), t).entries == p * a);
      CHECK(dual_shear_coords(dual_tropical_ensemble(lam, t), t).entries == pd * a);
      CHECK(index2_membership(shear_coords(tropical_ensemble(lam, t), t)));
    }
  }
}

TEST_CASE("integrality index by counting residues") {
  // {v : q v integral} contains 2Z^n, so its index is 2^n over the number of
  // members among the 0/1 vectors.
  for (const auto& t : unpunctured()) {
    const int n = t.num_edges();
    if (n > 12) continue;
    int members = 0;
    for (const VectorXq& v : box(n, 1)) members += index2_membership({t, v}) ? 1 : 0;
    CHECK(integrality_index(t) == Rational(1 << n, members));
  }
  CHECK(index2_membership({testsupport::square(), VectorXq::Zero(5)}));
  CHECK(integrality_index(testsupport::square()) == 8);
  CHECK(integrality_index(testsupport::annulus()) == 4);
}
