#include "surfcluster/ensemble.hpp"

#include <algorithm>
#include <set>

#include "surfcluster/curve.hpp"
#include "surfcluster/error.hpp"

namespace surfcluster {

namespace {

std::vector<int> sorted_ids(const Triangulation& t) {
  auto ids = t.ids();
  std::sort(ids.begin(), ids.end());
  return ids;
}

void require_unpunctured(const Triangulation& t) {
  if (t.surface.is_punctured())
    throw Error(ErrorKind::PuncturedSurfaceUnsupported, "ensemble data is defined here for unpunctured surfaces");
}

// Monomial prod_e x_{id(e)}^{row(e)} with doubled exponents given per position.
LaurentPoly monomial_from_row(const Triangulation& t, const std::vector<int>& vars, const std::vector<int>& doubled) {
  Exponent ex(vars.size(), 0);
  for (int e = 0; e < t.num_edges(); ++e) {
    auto it = std::lower_bound(vars.begin(), vars.end(), t.edges[e].id);
    ex[it - vars.begin()] += doubled[e];
  }
  return LaurentPoly::monomial(vars, ex);
}

}  // namespace

std::map<int, LaurentPoly> ensemble_pullback(const Triangulation& t) {
  auto ed = exchange_data(t);
  auto vars = sorted_ids(t);
  std::map<int, LaurentPoly> out;
  for (int k = 0; k < t.num_edges(); ++k) {
    std::vector<int> row(t.num_edges());
    for (int a = 0; a < t.num_edges(); ++a) row[a] = 2 * ed.p(k, a);
    out.emplace(t.edges[k].id, monomial_from_row(t, vars, row));
  }
  return out;
}

MatrixXq q_matrix(const Triangulation& t) {
  require_unpunctured(t);
  const int n = t.num_edges();
  MatrixXq q(n, n);
  for (int a = 0; a < n; ++a) {
    auto counts = crossing_counts(b_shift_edge(a, t), t);
    for (int b = 0; b < n; ++b) q(a, b) = -Rational(counts[b]) / 2;
  }
  return q;
}

std::map<int, LaurentPoly> inverse_a_from_x(const Triangulation& t) {
  MatrixXq q = q_matrix(t);
  auto vars = sorted_ids(t);
  std::map<int, LaurentPoly> out;
  for (int a = 0; a < t.num_edges(); ++a) {
    std::vector<int> row(t.num_edges());
    for (int b = 0; b < t.num_edges(); ++b) row[b] = static_cast<int>(boost::multiprecision::numerator(2 * q(a, b)));
    out.emplace(t.edges[a].id, monomial_from_row(t, vars, row));
  }
  return out;
}

MatrixXq muller_matrix(const Triangulation& t) {
  require_unpunctured(t);
  const int n = t.num_edges();
  MatrixXq pi = MatrixXq::Zero(n, n);
  std::set<int> specials;
  for (const auto& e : t.edges)
    if (e.boundary) specials.insert(e.mplus);
  for (int m : specials) {
    // Edge ends at m in clockwise order, from the interval ending at m to
    // the one starting there.
    auto cs = t.corners_at_special(m);
    std::vector<int> ends{t.side_at(cs[0].tri, cs[0].pos).edge};
    for (const auto& c : cs) ends.push_back(t.side_at(c.tri, c.pos + 1).edge);
    for (std::size_t i = 0; i < ends.size(); ++i)
      for (std::size_t j = 0; j < ends.size(); ++j) {
        if (i == j) continue;
        pi(ends[i], ends[j]) += i > j ? 1 : -1;
      }
  }
  return pi;
}

MatrixXq muller_matrix(const Triangulation& t, const std::vector<int>& ids) {
  std::vector<int> pos;
  for (int id : ids) {
    if (!t.has_id(id)) throw Error(ErrorKind::IncompatibleArcs, "arc " + std::to_string(id) + " is not an edge of the triangulation");
    pos.push_back(t.index_of(id));
  }
  MatrixXq full = muller_matrix(t);
  MatrixXq out(pos.size(), pos.size());
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = 0; j < pos.size(); ++j) out(i, j) = full(pos[i], pos[j]);
  return out;
}

LaurentPoly poisson_bracket_a(int a_id, int b_id, const Triangulation& t) {
  MatrixXq pi = muller_matrix(t, {a_id, b_id});
  auto vars = sorted_ids(t);
  LaurentPoly r = LaurentPoly::variable(vars, a_id) * LaurentPoly::variable(vars, b_id);
  r *= -pi(0, 1) / 4;
  return r;
}

bool index2_membership(const TropicalVector& v) {
  for (Eigen::Index i = 0; i < v.entries.size(); ++i)
    if (!is_integer(v.entries(i))) throw Error(ErrorKind::NonIntegerInput, "shear vector must be integral");
  VectorXq a = q_matrix(v.tri) * v.entries;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (!is_integer(a(i))) return false;
  return true;
}

Rational integrality_index(const Triangulation& t) {
  Rational d = exact_determinant<Rational>(q_matrix(t));
  if (d == 0) throw Error(ErrorKind::InvalidInput, "q is singular");
  return 1 / abs(d);
}

}  // namespace surfcluster
