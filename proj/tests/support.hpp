#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "surfcluster/poly.hpp"
#include "surfcluster/surface.hpp"

namespace testsupport {

// Seed for randomized property tests, overridable through SURFCLUSTER_SEED.
inline std::uint64_t seed() {
  const char* s = std::getenv("SURFCLUSTER_SEED");
  return s ? std::strtoull(s, nullptr, 10) : 20240611ULL;
}

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

inline surfcluster::Triangulation square() { return surfcluster::initial_triangulation(surfcluster::polygon_surface(4)); }
inline surfcluster::Triangulation pentagon() { return surfcluster::initial_triangulation(surfcluster::polygon_surface(5)); }
inline surfcluster::Triangulation hexagon() { return surfcluster::initial_triangulation(surfcluster::polygon_surface(6)); }
inline surfcluster::Triangulation annulus() {
  return surfcluster::initial_triangulation(surfcluster::new_surface(0, 0, {1, 1}));
}
inline surfcluster::Triangulation pants() {
  return surfcluster::initial_triangulation(surfcluster::new_surface(0, 0, {1, 1, 1}));
}
inline surfcluster::Triangulation two_triangles() {
  return surfcluster::initial_triangulation(
      surfcluster::disjoint_union(surfcluster::polygon_surface(3), surfcluster::polygon_surface(3)));
}

inline surfcluster::LaurentPoly var(const std::vector<int>& vars, int id, int power = 1) {
  return surfcluster::LaurentPoly::variable(vars, id, power);
}
inline surfcluster::LaurentPoly one(const std::vector<int>& vars) { return surfcluster::LaurentPoly::constant(1, vars); }

// Random Laurent polynomial with small integer coefficients and exponents.
inline surfcluster::LaurentPoly random_poly(std::mt19937_64& g, const std::vector<int>& vars, int terms = 3) {
  std::uniform_int_distribution<int> coef(-3, 3), ex(-2, 2);
  surfcluster::LaurentPoly p(vars);
  for (int i = 0; i < terms; ++i) {
    surfcluster::Exponent e(vars.size());
    for (auto& x : e) x = 2 * ex(g);
    p.add_term(e, coef(g));
  }
  return p;
}

}  // namespace testsupport
