#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "surfcluster/surface.hpp"

namespace surfcluster {

// "triangle", "square", "pentagon", "hexagon", "polygonN", "annulus"
// (one special point per boundary), "pants", "torus" (genus one, two
// special points), joined with '+' for disjoint unions.
MarkedSurface named_surface(const std::string& name);

struct SuiteOptions {
  std::string surface = "square";
  int bound = 2;
  std::uint64_t seed = 1;
  long samples = 2000;  // used when an exhaustive sweep exceeds `exhaustive_limit`
  long exhaustive_limit = 20000;
};

struct SuiteResult {
  bool pass = true;
  long cases = 0;
  long skipped = 0;  // cases outside the claim, e.g. negative pinning sums
  std::string counterexample;  // first failure, empty on success
};

// mutation, periodicity, inverse, poisson, wilson, roundtrip, flip,
// gluing, duality, amalgamation, basis, index2.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

// First pair of boundary interval ids whose gluing leaves the surface
// unpunctured, preferring intervals on different components.
std::pair<int, int> default_glue_pair(const Triangulation& t);

}  // namespace surfcluster
