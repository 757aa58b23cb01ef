#include "surfcluster/lamination.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "surfcluster/error.hpp"

namespace surfcluster {

namespace {

int mod3(int x) { return ((x % 3) + 3) % 3; }

void add_boundary_end(ShearCounts& r, const Triangulation& t, int tri, int side_pos, int other) {
  if (is_vertex_code(other)) return;
  int e = t.side_at(tri, side_pos).edge;
  if (other == mod3(side_pos + 2)) r.at_mplus[e]++;
  if (other == mod3(side_pos + 1)) r.at_mminus[e]++;
}

}  // namespace

ShearCounts chain_counts(const Materialized& m, const Triangulation& t) {
  const int ne = t.num_edges();
  ShearCounts r{std::vector<int>(ne, 0), std::vector<int>(ne, 0), std::vector<int>(ne, 0)};
  const auto& segs = m.segs;
  const int n = static_cast<int>(segs.size());
  if (n == 0) return r;
  const int pairs = m.loop ? n : n - 1;
  for (int j = 0; j < pairs; ++j) {
    const Segment& s = segs[j];
    const Segment& s2 = segs[(j + 1) % n];
    if (is_vertex_code(s.in) || is_vertex_code(s2.out)) continue;
    int o = s.out;
    int e = t.side_at(s.tri, o).edge;
    bool next1 = s.in == mod3(o + 1);
    bool next2 = s2.out == mod3(s2.in + 1);
    if (next1 && next2) r.interior[e]++;
    if (!next1 && !next2) r.interior[e]--;
  }
  if (!m.loop) {
    const Segment& f = segs.front();
    if (!m.start_open && !is_vertex_code(f.in) && t.is_boundary(t.side_at(f.tri, f.in).edge))
      add_boundary_end(r, t, f.tri, f.in, f.out);
    const Segment& l = segs.back();
    if (!m.end_open && !is_vertex_code(l.out) && t.is_boundary(t.side_at(l.tri, l.out).edge))
      add_boundary_end(r, t, l.tri, l.out, l.in);
  }
  return r;
}

ShearCounts curve_counts(const Curve& c, const Triangulation& t, const std::map<int, int>& sigma, int turns) {
  return chain_counts(materialize(c, t, sigma, turns), t);
}

namespace {

TropicalVector shear_impl(const PLamination& lam, const Triangulation& t, int turns, bool dual) {
  TropicalVector v{t, VectorXq::Zero(t.num_edges())};
  for (const auto& wc : lam.components) {
    ShearCounts k = curve_counts(wc.curve, t, lam.sigma, turns);
    for (int e = 0; e < t.num_edges(); ++e) {
      if (!t.is_boundary(e))
        v.entries(e) += wc.weight * k.interior[e];
      else if (dual)
        v.entries(e) += wc.weight * k.at_mminus[e];
      else
        v.entries(e) -= wc.weight * k.at_mplus[e];
    }
  }
  for (const auto& [id, nu] : lam.nu) {
    int e = t.index_of(id);
    if (!t.is_boundary(e)) throw Error(ErrorKind::InvalidInput, "pinning on interior edge " + std::to_string(id));
    v.entries(e) += nu;
  }
  return v;
}

}  // namespace

TropicalVector shear_coords(const PLamination& lam, const Triangulation& t, int turns) {
  return shear_impl(lam, t, turns, false);
}

TropicalVector dual_shear_coords(const PLamination& lam, const Triangulation& t, int turns) {
  return shear_impl(lam, t, turns, true);
}

TropicalVector a_coords(const ALamination& lam, const Triangulation& t) {
  TropicalVector v{t, VectorXq::Zero(t.num_edges())};
  for (const auto& wc : lam.components) {
    if (has_vertex_end(wc.curve))
      throw Error(ErrorKind::InvalidInput, "A-lamination curves end on the boundary");
    auto n = crossing_counts(wc.curve, t);
    for (int e = 0; e < t.num_edges(); ++e) v.entries(e) += wc.weight * Rational(n[e]) / 2;
  }
  return v;
}

bool is_integral(const TropicalVector& v) {
  for (Eigen::Index i = 0; i < v.entries.size(); ++i)
    if (!is_integer(v.entries(i))) return false;
  return true;
}

std::vector<WeightedCurve> merge_components(const std::vector<WeightedCurve>& comps) {
  std::vector<WeightedCurve> out;
  std::map<std::vector<int>, std::size_t> where;
  for (const auto& wc : comps) {
    auto key = canonical_key(wc.curve);
    auto it = where.find(key);
    if (it == where.end()) {
      where.emplace(key, out.size());
      out.push_back(wc);
    } else {
      out[it->second].weight += wc.weight;
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const WeightedCurve& w) { return w.weight == 0; }), out.end());
  return out;
}

namespace {

// Peripheral arc around a special point: one corner arc at each corner.
Curve peripheral_arc(const Triangulation& t, int point) {
  Curve c;
  for (const Corner& k : t.corners_at_special(point)) c.segs.push_back({k.tri, k.pos, mod3(k.pos + 1)});
  return c;
}

}  // namespace

ALamination alamination_from_a(const TropicalVector& a) {
  const Triangulation& t = a.tri;
  if (t.surface.is_punctured())
    throw Error(ErrorKind::PuncturedSurfaceUnsupported, "A-laminations are reconstructed on unpunctured surfaces");
  const int nt = t.num_triangles();
  std::vector<std::array<Rational, 3>> corner(nt);
  for (int i = 0; i < nt; ++i)
    for (int k = 0; k < 3; ++k)
      corner[i][k] = a.entries(t.side_at(i, k).edge) + a.entries(t.side_at(i, k + 1).edge) -
                     a.entries(t.side_at(i, k + 2).edge);
  ALamination lam;
  std::set<int> specials;
  for (const auto& ed : t.edges)
    if (ed.boundary) specials.insert(ed.mplus);
  for (int m : specials) {
    auto cs = t.corners_at_special(m);
    Rational w = corner[cs[0].tri][cs[0].pos];
    for (const auto& k : cs) w = std::min(w, corner[k.tri][k.pos]);
    for (const auto& k : cs) corner[k.tri][k.pos] -= w;
    if (w != 0) lam.components.push_back({peripheral_arc(t, m), w});
  }
  Integer den = 1;
  for (const auto& c : corner)
    for (const auto& x : c) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
  std::vector<int> counts(t.num_edges(), 0);
  std::vector<char> seen(t.num_edges(), 0);
  for (int i = 0; i < nt; ++i)
    for (int k = 0; k < 3; ++k) {
      Rational n = (corner[i][mod3(k - 1)] + corner[i][k]) * Rational(den);
      int e = t.side_at(i, k).edge;
      int v = static_cast<int>(boost::multiprecision::numerator(n));
      if (seen[e] && counts[e] != v) throw Error(ErrorKind::InvalidInput, "inconsistent corner counts");
      seen[e] = 1;
      counts[e] = v;
    }
  for (auto& [c, mult] : trace_normal(counts, t)) lam.components.push_back({c, Rational(mult) / Rational(den)});
  lam.components = merge_components(lam.components);
  return lam;
}

namespace {

PLamination ensemble_impl(const ALamination& lam, const Triangulation& t, bool dual) {
  PLamination p;
  for (int e : t.boundary_edges()) p.nu[t.edges[e].id] = 0;
  for (const auto& wc : lam.components) {
    int m = peripheral_point(wc.curve, t);
    if (m < 0) {
      if (wc.weight < 0) throw Error(ErrorKind::InvalidInput, "negative weight on a non-peripheral curve");
      p.components.push_back(wc);
      continue;
    }
    if (t.surface.is_puncture(m)) continue;
    if (dual)
      p.nu[t.edges[t.interval_ending_at(m)].id] += wc.weight;
    else
      p.nu[t.edges[t.interval_starting_at(m)].id] -= wc.weight;
  }
  p.components = merge_components(p.components);
  return p;
}

}  // namespace

PLamination tropical_ensemble(const ALamination& lam, const Triangulation& t) { return ensemble_impl(lam, t, false); }

PLamination dual_tropical_ensemble(const ALamination& lam, const Triangulation& t) {
  return ensemble_impl(lam, t, true);
}

PLamination renormalize(const PLamination& lam, const Triangulation& t, int edge_id) {
  FlipResult f = flip(t, edge_id);
  int e = t.index_of(edge_id);
  PLamination r = lam;
  for (auto& wc : r.components) wc.curve = renormalize(wc.curve, t, f, e);
  return r;
}

ALamination renormalize(const ALamination& lam, const Triangulation& t, int edge_id) {
  FlipResult f = flip(t, edge_id);
  int e = t.index_of(edge_id);
  ALamination r = lam;
  for (auto& wc : r.components) wc.curve = renormalize(wc.curve, t, f, e);
  return r;
}

void validate_lamination(const PLamination& lam, const Triangulation& t) {
  std::map<int, int> ends;
  for (const auto& wc : lam.components) {
    validate_curve(wc.curve, t);
    if (wc.weight < 0) throw Error(ErrorKind::InvalidInput, "negative weight");
    if (is_peripheral(wc.curve, t)) throw Error(ErrorKind::InvalidInput, "peripheral component in a P-lamination");
    if (wc.curve.loop) continue;
    for (const CurveEnd& end : {start_of(wc.curve, t), end_of(wc.curve, t)}) {
      if (end.kind != EndKind::Vertex) continue;
      if (!t.surface.is_puncture(end.point))
        throw Error(ErrorKind::InvalidInput, "curve ends at special point " + std::to_string(end.point));
      ends[end.point]++;
    }
  }
  for (const auto& [p, s] : lam.sigma) {
    if (s != 0 && s != 1 && s != -1) throw Error(ErrorKind::InvalidInput, "signature must be -1, 0 or 1");
    if ((s == 0) != (ends.count(p) == 0))
      throw Error(ErrorKind::InvalidInput, "signature at puncture " + std::to_string(p) + " disagrees with curve ends");
  }
  for (const auto& [p, n] : ends)
    if (!lam.sigma.count(p)) throw Error(ErrorKind::InvalidInput, "missing signature at puncture " + std::to_string(p));
  for (const auto& [id, nu] : lam.nu)
    if (!t.is_boundary(t.index_of(id))) throw Error(ErrorKind::InvalidInput, "pinning on an interior edge");
}

}  // namespace surfcluster
