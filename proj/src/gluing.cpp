#include "surfcluster/gluing.hpp"

#include <cstdlib>
#include <set>

#include "strands.hpp"
#include "surfcluster/error.hpp"

namespace surfcluster {

namespace {

template <typename Value, typename ChartT>
ChartT glue_values(const ChartT& c, const GlueResult& g, int left_id, int right_id) {
  if (c.kind != ChartKind::X) throw Error(ErrorKind::InvalidInput, "only X charts are glued");
  ChartT out{g.tri, c.kind, {}};
  for (const auto& e : g.tri.edges) {
    if (e.id == g.alpha_bar)
      out.values.push_back(Value(c.at_id(left_id) * c.at_id(right_id)));
    else
      out.values.push_back(c.at_id(e.id));
  }
  return out;
}

Integer denominator_lcm(const VectorXq& v) {
  Integer d = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) d = boost::multiprecision::lcm(d, boost::multiprecision::denominator(v(i)));
  return d;
}

PLamination scaled(PLamination lam, const Rational& f) {
  for (auto& wc : lam.components) wc.weight *= f;
  for (auto& [id, nu] : lam.nu) nu *= f;
  return lam;
}

// Lamination with the given (possibly rational) coordinates on v.tri.
PLamination from_coords(const TropicalVector& v, bool dual) {
  const Triangulation& t = v.tri;
  Integer d = denominator_lcm(v.entries);
  const TropicalVector w{t, v.entries * Rational(d)};
  PLamination lam = dual ? reconstruct_from_dual_shear(w) : reconstruct_from_shear(w);
  return scaled(lam, Rational(1) / Rational(d));
}

// Pinnings of the untouched boundary intervals carry over unchanged.
void keep_pinnings(PLamination& out, const PLamination& lam, const GlueResult& g) {
  for (int e : g.tri.boundary_edges()) {
    int id = g.tri.edges[e].id;
    auto it = lam.nu.find(id);
    out.nu[id] = it == lam.nu.end() ? Rational(0) : it->second;
  }
}

GluedLamination glue_impl(const PLamination& lam, const Triangulation& t, int left_id, int right_id, bool dual) {
  TropicalVector x = dual ? dual_shear_coords(lam, t) : shear_coords(lam, t);
  GluedVector g = glue_coords(x, left_id, right_id);
  PLamination out = from_coords(g.vec, dual);
  keep_pinnings(out, lam, g.glue);
  return {out, g.glue};
}

int to_int(const Rational& r, const char* what) {
  if (!is_integer(r)) throw Error(ErrorKind::NonIntegerInput, std::string(what) + " must be an integer");
  return static_cast<int>(boost::multiprecision::numerator(r));
}

}  // namespace

GluedChart glue_chart(const Chart& c, int left_id, int right_id) {
  GlueResult g = glue_surface(c.tri, left_id, right_id);
  return {glue_values<Fraction>(c, g, left_id, right_id), g};
}

GluedNumericChart glue_chart(const NumericChart& c, int left_id, int right_id) {
  GlueResult g = glue_surface(c.tri, left_id, right_id);
  return {glue_values<Rational>(c, g, left_id, right_id), g};
}

GluedVector glue_coords(const TropicalVector& v, int left_id, int right_id) {
  GlueResult g = glue_surface(v.tri, left_id, right_id);
  TropicalVector out{g.tri, VectorXq(g.tri.num_edges())};
  for (int e = 0; e < g.tri.num_edges(); ++e) {
    int id = g.tri.edges[e].id;
    out.entries(e) = id == g.alpha_bar ? v.at_id(left_id) + v.at_id(right_id) : v.at_id(id);
  }
  return {out, g};
}

GluedLamination glue_tropical(const PLamination& lam, const Triangulation& t, int left_id, int right_id) {
  return glue_impl(lam, t, left_id, right_id, false);
}

GluedLamination dual_glue_tropical(const PLamination& lam, const Triangulation& t, int left_id, int right_id) {
  return glue_impl(lam, t, left_id, right_id, true);
}

PLamination shift_action(const PLamination& lam, int left_id, int right_id, const Rational& mu) {
  PLamination r = lam;
  r.nu[left_id] += mu;
  r.nu[right_id] -= mu;
  return r;
}

GluedLamination glue_by_pins(const PLamination& lam, const Triangulation& t, int left_id, int right_id, bool dual) {
  GlueResult g = glue_surface(t, left_id, right_id);
  const int L = t.index_of(left_id), R = t.index_of(right_id);
  auto nu_of = [&](int id) {
    auto it = lam.nu.find(id);
    return it == lam.nu.end() ? 0 : to_int(it->second, "pinning");
  };
  const int nu_sum = nu_of(left_id) + nu_of(right_id);

  std::vector<std::array<int, 3>> own(t.num_triangles(), {0, 0, 0});
  int ends = 0;
  for (const auto& wc : lam.components) {
    if (has_vertex_end(wc.curve) || wc.curve.is_edge())
      throw Error(ErrorKind::InvalidInput, "pin gluing takes boundary-ended arcs and loops");
    int w = to_int(wc.weight, "weight");
    for (const auto& s : wc.curve.segs) own[s.tri][segment_corner(s)] += w;
    ends += 2 * w;
  }
  std::set<int> points{t.edges[L].mplus, t.edges[L].mminus, t.edges[R].mplus, t.edges[R].mminus};

  int p = 2 + 2 * (std::abs(nu_sum) + ends);
  for (int attempt = 0; attempt < 6; ++attempt, p *= 2) {
    detail::StrandSystem sys{g.tri, own, std::vector<int>(g.tri.num_edges(), 0)};
    for (int m : points)
      for (const Corner& c : t.corners_at_special(m)) sys.count[c.tri][c.pos] += p;
    auto side_total = [&](int tri, int pos) {
      return sys.count[tri][((pos - 1) % 3 + 3) % 3] + sys.count[tri][pos % 3];
    };
    for (int e = 0; e < g.tri.num_edges(); ++e) {
      SideLocation l = g.tri.locate({e, 0});
      sys.span[e] = side_total(l.tri, l.pos);
    }
    // Points on alpha_Z sit at psi = i - p + 1/2 from the m+ end (or at
    // i - (M_Z - p) + 1/2 for the dual parametrization); the pins are
    // matched by psi_L + psi_R = nu_L + nu_R.
    const int abar = g.tri.index_of(g.alpha_bar);
    SideLocation lL = t.locate({L, 0}), lR = t.locate({R, 0});
    const int mL = side_total(lL.tri, lL.pos), mR = side_total(lR.tri, lR.pos);
    sys.span[abar] = dual ? nu_sum + mL + mR - 2 * p : nu_sum + 2 * p;

    auto out = detail::collect_chains(detail::trace_strands(sys), g.tri);
    if (!out) continue;
    PLamination res = *out;
    keep_pinnings(res, lam, g);
    return {res, g};
  }
  throw Error(ErrorKind::InvalidInput, "peripheral window did not stabilise");
}

}  // namespace surfcluster
