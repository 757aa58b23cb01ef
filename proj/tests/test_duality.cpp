#include <doctest.h>

#include <set>

#include "support.hpp"
#include "surfcluster/duality.hpp"
#include "surfcluster/ensemble.hpp"
#include "surfcluster/error.hpp"
#include "surfcluster/gluing.hpp"
#include "surfcluster/wilson.hpp"

using namespace surfcluster;
using testsupport::var;

namespace {

std::vector<VectorXq> box(int n, int lo, int hi) {
  std::vector<VectorXq> out;
  std::vector<int> dig(n, lo);
  while (true) {
    VectorXq v(n);
    for (int i = 0; i < n; ++i) v(i) = dig[i];
    out.push_back(v);
    int i = 0;
    while (i < n && dig[i] == hi) dig[i++] = lo;
    if (i == n) return out;
    ++dig[i];
  }
}

Exponent minus_a(const Triangulation& t, const VectorXq& a) {
  auto vars = x_variables(t);
  Exponent e(vars.size(), 0);
  for (int i = 0; i < t.num_edges(); ++i)
    e[std::lower_bound(vars.begin(), vars.end(), t.edges[i].id) - vars.begin()] =
        static_cast<int>(boost::multiprecision::numerator(Rational(-2 * a(i))));
  return e;
}

// Dense Gaussian elimination over the union of exponents.
int dense_rank(const std::vector<LaurentPoly>& family) {
  std::set<int> all;
  for (const auto& p : family)
    for (int v : p.vars()) all.insert(v);
  std::vector<int> universe(all.begin(), all.end());
  std::map<Exponent, int> column;
  std::vector<std::map<Exponent, Rational>> rows;
  for (const auto& p : family) {
    LaurentPoly q = p.with_vars(universe);
    std::map<Exponent, Rational> row(q.terms().begin(), q.terms().end());
    for (const auto& [e, c] : row) column.emplace(e, 0);
    rows.push_back(row);
  }
  int n = 0;
  for (auto& [e, idx] : column) idx = n++;
  MatrixXq m = MatrixXq::Zero(static_cast<Eigen::Index>(rows.size()), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [e, c] : rows[r]) m(static_cast<Eigen::Index>(r), column[e]) = c;
  int rank = 0;
  for (int c = 0; c < n && rank < m.rows(); ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = rank; r < m.rows(); ++r)
      if (m(r, c) != 0) piv = r;
    if (piv < 0) continue;
    m.row(piv).swap(m.row(rank));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (r != rank && m(r, c) != 0) m.row(r) -= m.row(rank) * (m(r, c) / m(rank, c));
    ++rank;
  }
  return rank;
}

PLamination zero_pinned(const Triangulation& t) {
  PLamination lam;
  for (int b : t.boundary_edges()) lam.nu[t.edges[b].id] = 0;
  return lam;
}

}  // namespace

TEST_CASE("I_A examples") {
  auto t = testsupport::square();
  auto vars = x_variables(t);
  CHECK(I_A(ALamination{}, t) == LaurentPoly::constant(1, vars));
  auto inv = inverse_a_from_x(t);
  for (int e = 0; e < t.num_edges(); ++e) {
    // Weight 1 has half-integer a-coordinates; weight 2 is integral.
    try {
      I_A(ALamination{{{b_shift_edge(e, t), 1}}}, t);
      FAIL("expected NotIntegral");
    } catch (const Error& err) {
      CHECK(err.kind() == ErrorKind::NotIntegral);
    }
    const LaurentPoly& m = inv.at(t.edges[e].id);
    CHECK(I_A(ALamination{{{b_shift_edge(e, t), 2}}}, t) == m * m);
  }
  try {
    I_A(ALamination{}, initial_triangulation(new_surface(0, 1, {2})));
    FAIL("expected PuncturedSurfaceUnsupported");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::PuncturedSurfaceUnsupported);
  }
}

TEST_CASE("lowest term of I_A") {
  for (const auto& t : {testsupport::square(), testsupport::annulus()})
    for (const VectorXq& a : box(t.num_edges(), 0, 2)) {
      LaurentPoly p = I_A(alamination_from_a({t, a}), t);
      CHECK(lowest_exponent(p) == minus_a(t, a));
      CHECK(lowest_term(p).terms().begin()->second == 1);
      for (const auto& [e, c] : p.terms()) {
        CHECK(c > 0);
        for (int x : e) CHECK(x % 2 == 0);
      }
    }
}

TEST_CASE("I_X is a cluster monomial on the non-negative cone") {
  for (const auto& t : {testsupport::square(), testsupport::pentagon(), testsupport::annulus()}) {
    auto vars = a_variables(t);
    const int hi = t.num_edges() > 5 ? 1 : 2;
    for (const VectorXq& x : box(t.num_edges(), 0, hi)) {
      PLamination lam = reconstruct_from_dual_shear({t, x});
      LaurentPoly want = LaurentPoly::constant(1, vars);
      for (int e = 0; e < t.num_edges(); ++e)
        want = want * var(vars, t.edges[e].id, static_cast<int>(boost::multiprecision::numerator(x(e))));
      CHECK(I_X(lam, t) == want);
    }
  }
  auto t = testsupport::square();
  CHECK(I_X(zero_pinned(t), t) == LaurentPoly::constant(1, a_variables(t)));
}

TEST_CASE("dominance example on two triangles") {
  auto t = testsupport::two_triangles();
  PLamination lam = zero_pinned(t);
  lam.nu[0] = -1;
  CHECK(I_X(lam, t) == var(a_variables(t), 0, -1));
  GluedLamination g = dual_glue_tropical(lam, t, 0, 3);
  std::map<int, std::string> labels{{1, "β"}, {2, "γ"}, {4, "δ"}, {5, "ε"}, {g.glue.alpha_bar, "ᾱ"}};
  CHECK(format(I_X(g.lam, g.glue.tri), "A", labels, "") == "(A_βA_δ + A_γA_ε)/A_ᾱ");

  AmalgamationReport r = check_bracelet_amalgamation(lam, t, 0, 3);
  CHECK(r.status == AmalgamationStatus::NegativePinningSum);
  CHECK_FALSE(r.equal);
  auto v2 = r.restricted.vars();
  CHECK(r.restricted == var(v2, g.glue.alpha_bar, -1));
  bool found = false;
  for (const auto& q : r.frozen_quotients) found = found || q == var(q.vars(), 2) * var(q.vars(), 5);
  CHECK(found);
}

TEST_CASE("bracelet amalgamation on two rectangles") {
  // Two parallel arcs end on the left glued side, pinned at 2; one arc ends
  // on the right glued side, pinned at 0.
  auto t = initial_triangulation(disjoint_union(polygon_surface(4), polygon_surface(4)));
  auto [L, R] = std::pair{0, 7};
  REQUIRE(t.is_boundary(t.index_of(L)));
  REQUIRE(t.is_boundary(t.index_of(R)));
  // Boundary intervals 0..3 and 4..7 run around the two squares.
  auto opposite = [&](int id) { return t.index_of(4 * (id / 4) + (id + 2) % 4); };
  auto across = [&](int id) {
    const int o = opposite(id), g = t.index_of(id);
    for (const auto& c : enumerate_curves(t, 3)) {
      std::set<int> ends{start_of(c, t).edge, end_of(c, t).edge};
      if (ends == std::set<int>{o, g}) return c;
    }
    FAIL("no arc across");
    return Curve{};
  };
  PLamination lam = zero_pinned(t);
  lam.components = {{across(L), 2}, {across(R), 1}};
  lam.nu[L] = 2;
  AmalgamationReport r = check_bracelet_amalgamation(lam, t, L, R);
  CHECK(r.status == AmalgamationStatus::Holds);
  CHECK(r.equal);
  CHECK(r.restricted == r.glued);

  AmalgamationReport e = check_bracelet_amalgamation(zero_pinned(t), t, L, R);
  CHECK(e.equal);
  CHECK(e.restricted == LaurentPoly::constant(1, e.restricted.vars()));
}

TEST_CASE("ensemble compatibility") {
  for (const auto& t : {testsupport::square(), testsupport::annulus()}) {
    CHECK(check_ensemble_compatibility(ALamination{}, t));
    for (const VectorXq& a : box(t.num_edges(), 0, 2)) CHECK(check_ensemble_compatibility(alamination_from_a({t, a}), t));
  }
  auto t = testsupport::square();
  auto pb = ensemble_pullback(t);
  for (int k : {2, 4})
    for (int b : t.boundary_edges()) {
      ALamination lam{{{b_shift_edge(b, t), k}}};
      CHECK(check_ensemble_compatibility(lam, t));
      LaurentPoly lhs = substitute_monomial(I_A(lam, t), pb);
      CHECK(lhs == var(a_variables(t), t.edges[b].id, k));
    }
}

TEST_CASE("duality maps are multiplicative") {
  auto g = testsupport::rng(61);
  int split_a = 0, split_x = 0;
  for (const auto& t : {testsupport::square(), testsupport::annulus(), testsupport::pentagon()}) {
    std::uniform_int_distribution<int> d(0, 2), s(-2, 2);
    for (int n = 0; n < 60; ++n) {
      VectorXq a(t.num_edges()), x(t.num_edges());
      for (int i = 0; i < a.size(); ++i) {
        a(i) = d(g);
        x(i) = s(g);
      }
      // Splits off one component whenever both parts stay integral.
      ALamination al = alamination_from_a({t, a});
      if (al.components.size() >= 2) {
        ALamination first{{al.components[0]}}, rest{{al.components.begin() + 1, al.components.end()}};
        if (is_integral(a_coords(first, t))) {
          CHECK(I_A(al, t) == I_A(first, t) * I_A(rest, t));
          ++split_a;
        }
      }
      PLamination pl = reconstruct_from_dual_shear({t, x});
      if (pl.components.size() >= 2) {
        PLamination first = zero_pinned(t), rest = pl;
        first.components.assign(1, pl.components[0]);
        rest.components.erase(rest.components.begin());
        CHECK(I_X(pl, t) == I_X(first, t) * I_X(rest, t));
        ++split_x;
      }
    }
  }
  CHECK(split_a > 10);
  CHECK(split_x > 10);
}

TEST_CASE("sparse rank matches dense elimination") {
  auto g = testsupport::rng(62);
  std::vector<int> v{1, 2, 3};
  for (int s = 0; s < 100; ++s) {
    std::vector<LaurentPoly> fam;
    std::uniform_int_distribution<int> size(1, 6), pick(0, 9);
    for (int i = size(g); i > 0; --i) fam.push_back(testsupport::random_poly(g, v, 3));
    // Mix in combinations of earlier members.
    if (fam.size() >= 2) fam.push_back(fam[0] * LaurentPoly::constant(pick(g) - 4, v) + fam[1]);
    CHECK(polynomial_rank(fam) == dense_rank(fam));
    CHECK(linearly_independent(fam) == (dense_rank(fam) == static_cast<int>(fam.size())));
  }
}

TEST_CASE("basis families are independent") {
  auto t = testsupport::square();
  std::vector<PLamination> xs;
  for (const VectorXq& x : box(5, -1, 1)) xs.push_back(reconstruct_from_dual_shear({t, x}));
  CHECK(xs.size() == 243);
  CHECK(basis_independence(xs, t));
  std::vector<ALamination> as;
  for (const VectorXq& a : box(5, 0, 1)) as.push_back(alamination_from_a({t, a}));
  CHECK(basis_independence(as, t));
  // A repeated member makes the family dependent.
  as.push_back(as.back());
  CHECK_FALSE(basis_independence(as, t));
}
