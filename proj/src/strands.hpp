#pragma once

#include <optional>
#include <vector>

#include "surfcluster/curve.hpp"
#include "surfcluster/lamination.hpp"
#include "surfcluster/surface.hpp"

namespace surfcluster::detail {

// Finitely many corner arcs in every corner of a triangulation. Points on a
// side are indexed from the start of the side in its triangle: first the
// arcs of the starting corner, innermost first, then those of the ending
// corner, outermost first. Across an interior edge, index i on one side is
// joined to index span[e] - 1 - i on the other; indices out of range leave
// the strand dangling.
struct StrandSystem {
  const Triangulation& t;
  std::vector<std::array<int, 3>> count;  // per triangle and corner
  std::vector<int> span;                  // per edge position
};

// Traces every strand into a chain. Chains that dangle at an end are
// marked open there.
std::vector<Materialized> trace_strands(const StrandSystem& sys);

// Turns traced chains into components and puncture signs. Peripheral
// chains around special points are dropped; open ends must spiral a full
// turn into a puncture, otherwise the window was too small and nullopt is
// returned. Pinnings are left empty.
std::optional<PLamination> collect_chains(const std::vector<Materialized>& chains, const Triangulation& t);

}  // namespace surfcluster::detail
