#include "strands.hpp"
#include "surfcluster/error.hpp"
#include "surfcluster/lamination.hpp"

namespace surfcluster {

namespace {

// N corner arcs in every corner; across edge e the strands are joined with
// the offset x_e, which is where the shear coordinate enters.
std::optional<PLamination> attempt(const TropicalVector& v, int n) {
  const Triangulation& t = v.tri;
  detail::StrandSystem sys{t, std::vector<std::array<int, 3>>(t.num_triangles(), {n, n, n}),
                           std::vector<int>(t.num_edges())};
  for (int e = 0; e < t.num_edges(); ++e)
    sys.span[e] = 2 * n + static_cast<int>(boost::multiprecision::numerator(v.entries(e)));
  auto lam = detail::collect_chains(detail::trace_strands(sys), t);
  if (!lam) return std::nullopt;
  TropicalVector base = shear_coords(*lam, t);
  for (int e : t.boundary_edges()) lam->nu[t.edges[e].id] = v.entries(e) - base.entries(e);
  return lam;
}

}  // namespace

PLamination reconstruct_from_shear(const TropicalVector& v) {
  Rational total = 0;
  for (Eigen::Index i = 0; i < v.entries.size(); ++i) {
    if (!is_integer(v.entries(i)))
      throw Error(ErrorKind::NonIntegerInput, "shear entry " + to_string(v.entries(i)) + " is not an integer");
    total += abs(v.entries(i));
  }
  int n = 2 + 2 * static_cast<int>(boost::multiprecision::numerator(total));
  for (int attempt_no = 0; attempt_no < 6; ++attempt_no, n *= 2)
    if (auto lam = attempt(v, n)) return *lam;
  throw Error(ErrorKind::InvalidInput, "strand window did not stabilise");
}

PLamination reconstruct_from_dual_shear(const TropicalVector& v) {
  PLamination lam = reconstruct_from_shear(v);
  const Triangulation& t = v.tri;
  for (auto& [id, nu] : lam.nu) nu = 0;
  TropicalVector base = dual_shear_coords(lam, t);
  for (int e : t.boundary_edges()) lam.nu[t.edges[e].id] = v.entries(e) - base.entries(e);
  return lam;
}

}  // namespace surfcluster
