#include "surfcluster/wilson.hpp"

#include <algorithm>

#include "surfcluster/error.hpp"

namespace surfcluster {

TurningWord turning_pattern(const Curve& c, const Triangulation& t) {
  if (c.is_edge() || has_vertex_end(c))
    throw Error(ErrorKind::InvalidInput, "turning pattern needs a boundary-ended arc or a loop");
  validate_curve(c, t);
  TurningWord w;
  w.loop = c.loop;
  if (!c.loop) w.edges.push_back(t.side_at(c.segs.front().tri, c.segs.front().in).edge);
  for (const auto& s : c.segs) {
    w.turns.push_back(segment_turn(s));
    w.edges.push_back(t.side_at(s.tri, s.out).edge);
  }
  return w;
}

std::vector<int> x_variables(const Triangulation& t) {
  auto ids = t.ids();
  std::sort(ids.begin(), ids.end());
  return ids;
}

Matrix2 h_matrix(const std::vector<int>& vars, int id) {
  LaurentPoly half = LaurentPoly::variable(vars, id, 1);
  Exponent e(vars.size(), 0);
  int idx = half.var_index(id);
  e[idx] = 1;
  LaurentPoly up = LaurentPoly::monomial(vars, e);
  e[idx] = -1;
  LaurentPoly down = LaurentPoly::monomial(vars, e);
  LaurentPoly zero(vars);
  return {{{up, zero}, {zero, down}}};
}

Matrix2 e_matrix(const std::vector<int>& vars, char turn) {
  LaurentPoly one = LaurentPoly::constant(1, vars), zero(vars);
  if (turn == 'L') return {{{one, one}, {zero, one}}};
  if (turn == 'R') return {{{one, zero}, {one, one}}};
  throw Error(ErrorKind::InvalidInput, std::string("unknown turn '") + turn + "'");
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

Matrix2 identity2(const std::vector<int>& vars) {
  LaurentPoly one = LaurentPoly::constant(1, vars), zero(vars);
  return {{{one, zero}, {zero, one}}};
}

LaurentPoly determinant(const Matrix2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

LaurentPoly trace(const Matrix2& m) { return m[0][0] + m[1][1]; }

Matrix2 pow(const Matrix2& m, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "negative matrix power");
  Matrix2 result = identity2(m[0][0].vars());
  Matrix2 base = m;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

namespace {

void check_word(const TurningWord& w, const Triangulation& t) {
  std::size_t want = w.loop ? w.turns.size() : w.turns.size() + 1;
  if (w.edges.size() != want) throw Error(ErrorKind::InvalidInput, "turning word has inconsistent lengths");
  for (int e : w.edges)
    if (e < 0 || e >= t.num_edges()) throw Error(ErrorKind::UnknownEdge, "edge position " + std::to_string(e));
}

}  // namespace

Matrix2 wilson_line(const TurningWord& w, const Triangulation& t) {
  if (w.loop) throw Error(ErrorKind::InvalidInput, "Wilson lines are taken along arcs");
  check_word(w, t);
  auto vars = x_variables(t);
  Matrix2 m = h_matrix(vars, t.edges[w.edges[0]].id);
  for (std::size_t i = 0; i < w.turns.size(); ++i)
    m = m * e_matrix(vars, w.turns[i]) * h_matrix(vars, t.edges[w.edges[i + 1]].id);
  return m;
}

Matrix2 loop_matrix(const TurningWord& w, const Triangulation& t) {
  if (!w.loop) throw Error(ErrorKind::NotLoop, "monodromy needs a closed curve");
  check_word(w, t);
  auto vars = x_variables(t);
  Matrix2 m = identity2(vars);
  for (std::size_t i = 0; i < w.turns.size(); ++i)
    m = m * e_matrix(vars, w.turns[i]) * h_matrix(vars, t.edges[w.edges[i]].id);
  return m;
}

LaurentPoly trace_monodromy(const TurningWord& w, int power, const Triangulation& t) {
  if (power < 1) throw Error(ErrorKind::InvalidInput, "loop weight must be positive");
  return trace(pow(loop_matrix(w, t), power));
}

}  // namespace surfcluster
