#pragma once

#include <map>
#include <vector>

#include "surfcluster/lamination.hpp"
#include "surfcluster/poly.hpp"
#include "surfcluster/surface.hpp"

namespace surfcluster {

// Sorted edge ids of t, the variable universe A_id.
std::vector<int> a_variables(const Triangulation& t);

// Product over components: traces of loop monodromies, and powers of the
// (2,2)-entry of the Wilson line for arcs (peripheral arcs may carry
// negative weights). Polynomial in X_id. Throws NotIntegral and
// PuncturedSurfaceUnsupported.
LaurentPoly I_A(const ALamination& lam, const Triangulation& t);

// Product over components: loop traces pulled back to the A-chart, A of
// the negative shift of each arc, and A_id^{nu_id} on boundary intervals.
// Polynomial in A_id. Throws NotIntegral and PuncturedSurfaceUnsupported.
LaurentPoly I_X(const PLamination& lam, const Triangulation& t);

// Lambda length of an ideal arc as a Laurent polynomial in the A-chart of
// t, obtained by flipping until the arc is an edge and mutating back.
LaurentPoly arc_lambda_length(const Curve& ideal_arc, const Triangulation& t);

// p^*(I_A(L)) == I_X(dual ensemble of L).
bool check_ensemble_compatibility(const ALamination& lam, const Triangulation& t);

enum class AmalgamationStatus { Holds, Fails, NegativePinningSum };

struct AmalgamationReport {
  AmalgamationStatus status = AmalgamationStatus::Holds;
  bool equal = false;
  LaurentPoly restricted;  // Res^*(I_X(L, nu)) on the glued surface
  LaurentPoly glued;       // I_X of the dual gluing
  // For each term of `glued` whose quotient by `restricted` is a monomial
  // in boundary variables only, that quotient.
  std::vector<LaurentPoly> frozen_quotients;
  GlueResult glue;
};

// Compares Res^* I_X with I_X after the dual gluing. When
// nu_left + nu_right < 0 both sides are still evaluated and the status is
// NegativePinningSum.
AmalgamationReport check_bracelet_amalgamation(const PLamination& lam, const Triangulation& t, int left_id,
                                               int right_id);

// Exact rank over Q of a family of Laurent polynomials.
int polynomial_rank(const std::vector<LaurentPoly>& family);
bool linearly_independent(const std::vector<LaurentPoly>& family);
bool basis_independence(const std::vector<PLamination>& family, const Triangulation& t);
bool basis_independence(const std::vector<ALamination>& family, const Triangulation& t);

}  // namespace surfcluster
