#pragma once

#include "surfcluster/cluster.hpp"
#include "surfcluster/lamination.hpp"
#include "surfcluster/rational.hpp"
#include "surfcluster/surface.hpp"

namespace surfcluster {

struct GluedChart {
  Chart chart;
  GlueResult glue;
};
struct GluedNumericChart {
  NumericChart chart;
  GlueResult glue;
};
struct GluedVector {
  TropicalVector vec;
  GlueResult glue;
};
struct GluedLamination {
  PLamination lam;
  GlueResult glue;
};

// X_abar = X_left * X_right; every other value moves along the edge map.
GluedChart glue_chart(const Chart& c, int left_id, int right_id);
GluedNumericChart glue_chart(const NumericChart& c, int left_id, int right_id);

// x_abar = x_left + x_right on coordinate vectors.
GluedVector glue_coords(const TropicalVector& v, int left_id, int right_id);

// Gluing of P-laminations, computed on coordinates and rebuilt on the glued
// triangulation: x_abar = x_left + x_right, other interior coordinates
// unchanged, pinnings of the remaining intervals unchanged. The dual
// version adds the dual coordinates instead. Rational inputs are scaled to
// integers first.
GluedLamination glue_tropical(const PLamination& lam, const Triangulation& t, int left_id, int right_id);
GluedLamination dual_glue_tropical(const PLamination& lam, const Triangulation& t, int left_id, int right_id);

// nu_left += mu, nu_right -= mu.
PLamination shift_action(const PLamination& lam, int left_id, int right_id, const Rational& mu);

// Gluing by joining curve ends across the two intervals with the pins
// nu_left, nu_right, as in the construction with peripheral collections.
// Integral weights and pinnings, no puncture ends. Pinnings of the
// remaining intervals carry over.
GluedLamination glue_by_pins(const PLamination& lam, const Triangulation& t, int left_id, int right_id,
                             bool dual = false);

}  // namespace surfcluster
