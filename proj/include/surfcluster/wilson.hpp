#pragma once

#include <array>
#include <string>
#include <vector>

#include "surfcluster/curve.hpp"
#include "surfcluster/poly.hpp"
#include "surfcluster/surface.hpp"

namespace surfcluster {

// Edges traversed (positions) and the turn taken in each triangle. An arc
// word has one more edge than turns, starting and ending on boundary
// intervals; a loop word is cyclic with edges[i] crossed after turns[i].
struct TurningWord {
  bool loop = false;
  std::vector<int> edges;
  std::string turns;
};

using Matrix2 = std::array<std::array<LaurentPoly, 2>, 2>;

TurningWord turning_pattern(const Curve& c, const Triangulation& t);

// Sorted edge ids of t, used as the variable universe X_id.
std::vector<int> x_variables(const Triangulation& t);

Matrix2 h_matrix(const std::vector<int>& vars, int id);
Matrix2 e_matrix(const std::vector<int>& vars, char turn);
Matrix2 operator*(const Matrix2& a, const Matrix2& b);
Matrix2 identity2(const std::vector<int>& vars);
LaurentPoly determinant(const Matrix2& m);
LaurentPoly trace(const Matrix2& m);
Matrix2 pow(const Matrix2& m, int n);

// H(X_0) E^{t_1} H(X_1) ... E^{t_M} H(X_M) for an arc word.
Matrix2 wilson_line(const TurningWord& w, const Triangulation& t);
// E^{t_1} H(X_1) ... E^{t_M} H(X_M) for a loop word.
Matrix2 loop_matrix(const TurningWord& w, const Triangulation& t);
// Tr(M^power) of the loop matrix. The lift with nonnegative entries is used,
// so the lowest term is positive. Throws NotLoop.
LaurentPoly trace_monodromy(const TurningWord& w, int power, const Triangulation& t);

inline const LaurentPoly& delta22(const Matrix2& m) { return m[1][1]; }

}  // namespace surfcluster
