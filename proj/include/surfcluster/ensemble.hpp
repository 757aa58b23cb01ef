#pragma once

#include <map>
#include <vector>

#include "surfcluster/cluster.hpp"
#include "surfcluster/poly.hpp"
#include "surfcluster/rational.hpp"
#include "surfcluster/surface.hpp"

namespace surfcluster {

// X_id -> prod_a A_a^{(eps+m)_{id,a}}, in the variables A_id of t.
std::map<int, LaurentPoly> ensemble_pullback(const Triangulation& t);

// q_{ab} = -a_b(shift of a) over edge positions. Throws
// PuncturedSurfaceUnsupported.
MatrixXq q_matrix(const Triangulation& t);
// A_id -> prod_b X_b^{q_{id,b}}.
std::map<int, LaurentPoly> inverse_a_from_x(const Triangulation& t);

// Clockwise-end compatibility matrix of the edges of t (positions), or of
// the listed edge ids. Throws IncompatibleArcs for ids not in t.
MatrixXq muller_matrix(const Triangulation& t);
MatrixXq muller_matrix(const Triangulation& t, const std::vector<int>& ids);

// {A_a, A_b} = -1/4 pi_ab A_a A_b.
LaurentPoly poisson_bracket_a(int a_id, int b_id, const Triangulation& t);

// Whether q v is integral, i.e. v is the shear vector of an integral
// A-lamination under the tropical ensemble map.
bool index2_membership(const TropicalVector& v);
// Index of {v in Z^n : q v in Z^n} in Z^n, computed as 1/|det q|.
Rational integrality_index(const Triangulation& t);

}  // namespace surfcluster
