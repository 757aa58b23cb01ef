#pragma once

#include <map>
#include <vector>

#include "surfcluster/cluster.hpp"
#include "surfcluster/curve.hpp"
#include "surfcluster/rational.hpp"
#include "surfcluster/surface.hpp"

namespace surfcluster {

struct WeightedCurve {
  Curve curve;
  Rational weight;
};

// Curves are boundary-ended arcs or loops; peripheral arcs may carry any
// rational weight.
struct ALamination {
  std::vector<WeightedCurve> components;
};

// Non-peripheral curves; arcs may end at punctures, where `sigma` gives the
// spiralling direction (+1 clockwise). `nu` is keyed by boundary interval id.
struct PLamination {
  std::vector<WeightedCurve> components;
  std::map<int, int> sigma;
  std::map<int, Rational> nu;
};

// Per-curve counts on a triangulation, indexed by edge position: signed
// quadrilateral contributions on interior edges, and the corner arcs at m+
// (resp. m-) of each boundary interval.
struct ShearCounts {
  std::vector<int> interior;
  std::vector<int> at_mplus;
  std::vector<int> at_mminus;
};

// Counts of a (possibly open-ended) segment chain.
ShearCounts chain_counts(const Materialized& m, const Triangulation& t);
// Counts of a curve whose puncture ends spiral `turns` times.
ShearCounts curve_counts(const Curve& c, const Triangulation& t, const std::map<int, int>& sigma, int turns = 2);

TropicalVector shear_coords(const PLamination& lam, const Triangulation& t, int turns = 2);
TropicalVector dual_shear_coords(const PLamination& lam, const Triangulation& t, int turns = 2);

TropicalVector a_coords(const ALamination& lam, const Triangulation& t);
bool is_integral(const TropicalVector& v);

// Inverse of a_coords on an unpunctured surface: peripheral weights are the
// minimal corner counts at each special point; the rest is traced as a
// normal multicurve.
ALamination alamination_from_a(const TropicalVector& a);

// Tropical ensemble maps: peripheral arcs are removed and turned into
// pinnings at m+ (with a minus sign) or at m- (with a plus sign).
PLamination tropical_ensemble(const ALamination& lam, const Triangulation& t);
PLamination dual_tropical_ensemble(const ALamination& lam, const Triangulation& t);

// Rewrites every component on flip(t, edge_id).
PLamination renormalize(const PLamination& lam, const Triangulation& t, int edge_id);
ALamination renormalize(const ALamination& lam, const Triangulation& t, int edge_id);

// Merges isotopic components and drops zero weights.
std::vector<WeightedCurve> merge_components(const std::vector<WeightedCurve>& comps);

// Checks curve shapes, weights, and the agreement of `sigma` with the
// puncture ends present.
void validate_lamination(const PLamination& lam, const Triangulation& t);

// Lamination whose shear coordinates are the given integer vector.
// Throws NonIntegerInput.
PLamination reconstruct_from_shear(const TropicalVector& v);
// Same for dual coordinates: the curves come from the interior entries and
// the pinnings are chosen to meet the dual boundary entries.
PLamination reconstruct_from_dual_shear(const TropicalVector& v);

}  // namespace surfcluster
