#include "surfcluster/cluster.hpp"

#include <algorithm>

#include "surfcluster/error.hpp"

namespace surfcluster {

Chart symbolic_chart(const Triangulation& t, ChartKind kind) {
  Chart c{t, kind, {}};
  auto ids = t.ids();
  for (int id : ids) c.values.emplace_back(LaurentPoly::variable(ids, id));
  return c;
}

NumericChart numeric_chart(const Triangulation& t, ChartKind kind, const std::map<int, Rational>& values) {
  NumericChart c{t, kind, {}};
  for (const auto& e : t.edges) {
    auto it = values.find(e.id);
    if (it == values.end()) throw Error(ErrorKind::UnmappedVariable, "no value for edge " + std::to_string(e.id));
    if (it->second <= 0) throw Error(ErrorKind::InvalidInput, "chart values must be positive");
    c.values.push_back(it->second);
  }
  return c;
}

NumericChart evaluate(const Chart& c, const std::map<int, Rational>& point) {
  NumericChart n{c.tri, c.kind, {}};
  for (const auto& v : c.values) n.values.push_back(eval_positive(v, point));
  return n;
}

namespace {

template <typename V>
V one_like(const V& v);
template <>
Fraction one_like(const Fraction& v) {
  return Fraction(LaurentPoly::constant(1, v.num().vars()));
}
template <>
Rational one_like(const Rational&) {
  return Rational(1);
}

template <typename V>
V power(const V& v, int n) {
  if constexpr (std::is_same_v<V, Rational>) {
    V r = 1;
    V b = n < 0 ? V(1) / v : v;
    for (int i = 0; i < std::abs(n); ++i) r *= b;
    return r;
  } else {
    return pow(v, n);
  }
}

template <typename V>
std::pair<std::vector<V>, FlipResult> x_step(const Triangulation& t, const std::vector<V>& x, int edge_id) {
  const int k = t.index_of(edge_id);
  if (t.is_boundary(k)) throw Error(ErrorKind::NotInterior, "edge " + std::to_string(edge_id));
  Eigen::MatrixXi eps = exchange_data(t).epsilon;
  FlipResult f = flip(t, edge_id);
  std::vector<V> out(x);
  const V one = one_like(x[k]);
  for (int a = 0; a < t.num_edges(); ++a) {
    if (a == k || eps(a, k) == 0) continue;
    int e = eps(a, k);
    int sgn = e > 0 ? 1 : -1;
    V factor = one + power(x[k], -sgn);
    out[a] = x[a] * power(factor, -e);
  }
  out[k] = power(x[k], -1);
  return {out, f};
}

template <typename V>
std::pair<std::vector<V>, FlipResult> a_step(const Triangulation& t, const std::vector<V>& a, int edge_id) {
  const int k = t.index_of(edge_id);
  if (t.is_boundary(k)) throw Error(ErrorKind::NotInterior, "edge " + std::to_string(edge_id));
  Eigen::MatrixXi eps = exchange_data(t).epsilon;
  FlipResult f = flip(t, edge_id);
  V pos = one_like(a[k]), neg = one_like(a[k]);
  for (int b = 0; b < t.num_edges(); ++b) {
    if (eps(k, b) > 0) pos = pos * power(a[b], eps(k, b));
    if (eps(k, b) < 0) neg = neg * power(a[b], -eps(k, b));
  }
  std::vector<V> out(a);
  out[k] = (pos + neg) * power(a[k], -1);
  return {out, f};
}

}  // namespace

ChartMutation mutate_x(const Chart& c, int edge_id) {
  if (c.kind != ChartKind::X) throw Error(ErrorKind::InvalidInput, "mutate_x needs an X chart");
  auto [vals, f] = x_step(c.tri, c.values, edge_id);
  return {Chart{f.tri, ChartKind::X, vals}, f.relabel};
}

ChartMutation mutate_a(const Chart& c, int edge_id) {
  if (c.kind != ChartKind::A) throw Error(ErrorKind::InvalidInput, "mutate_a needs an A chart");
  auto [vals, f] = a_step(c.tri, c.values, edge_id);
  return {Chart{f.tri, ChartKind::A, vals}, f.relabel};
}

ChartMutation mutate(const Chart& c, int edge_id) {
  return c.kind == ChartKind::X ? mutate_x(c, edge_id) : mutate_a(c, edge_id);
}

NumericMutation mutate_x(const NumericChart& c, int edge_id) {
  if (c.kind != ChartKind::X) throw Error(ErrorKind::InvalidInput, "mutate_x needs an X chart");
  auto [vals, f] = x_step(c.tri, c.values, edge_id);
  return {NumericChart{f.tri, ChartKind::X, vals}, f.relabel};
}

NumericMutation mutate_a(const NumericChart& c, int edge_id) {
  if (c.kind != ChartKind::A) throw Error(ErrorKind::InvalidInput, "mutate_a needs an A chart");
  auto [vals, f] = a_step(c.tri, c.values, edge_id);
  return {NumericChart{f.tri, ChartKind::A, vals}, f.relabel};
}

TropicalMutation mutate_x_tropical(const TropicalVector& v, int edge_id) {
  const Triangulation& t = v.tri;
  const int k = t.index_of(edge_id);
  if (t.is_boundary(k)) throw Error(ErrorKind::NotInterior, "edge " + std::to_string(edge_id));
  Eigen::MatrixXi eps = exchange_data(t).epsilon;
  FlipResult f = flip(t, edge_id);
  VectorXq out = v.entries;
  const Rational& xk = v.entries(k);
  for (int a = 0; a < t.num_edges(); ++a) {
    if (a == k || eps(a, k) == 0) continue;
    int e = eps(a, k);
    Rational arg = e > 0 ? Rational(-xk) : xk;
    out(a) -= Rational(e) * std::max(Rational(0), arg);
  }
  out(k) = -xk;
  return {TropicalVector{f.tri, out}, f.relabel};
}

TropicalMutation mutate_a_tropical(const TropicalVector& v, int edge_id) {
  const Triangulation& t = v.tri;
  const int k = t.index_of(edge_id);
  if (t.is_boundary(k)) throw Error(ErrorKind::NotInterior, "edge " + std::to_string(edge_id));
  Eigen::MatrixXi eps = exchange_data(t).epsilon;
  FlipResult f = flip(t, edge_id);
  Rational pos = 0, neg = 0;
  for (int b = 0; b < t.num_edges(); ++b) {
    if (eps(k, b) > 0) pos += Rational(eps(k, b)) * v.entries(b);
    if (eps(k, b) < 0) neg += Rational(-eps(k, b)) * v.entries(b);
  }
  VectorXq out = v.entries;
  out(k) = -v.entries(k) + std::max(pos, neg);
  return {TropicalVector{f.tri, out}, f.relabel};
}

LaurentPoly poisson_bracket_x(int a_id, int b_id, const Triangulation& t) {
  int a = t.index_of(a_id), b = t.index_of(b_id);
  Eigen::MatrixXi eps = exchange_data(t).epsilon;
  auto ids = t.ids();
  LaurentPoly r = LaurentPoly::variable(ids, a_id) * LaurentPoly::variable(ids, b_id);
  r *= Rational(eps(a, b));
  return r;
}

}  // namespace surfcluster
