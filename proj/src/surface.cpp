#include "surfcluster/surface.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "surfcluster/error.hpp"

namespace surfcluster {

int SurfaceComponent::euler_characteristic() const {
  return 2 - 2 * genus - static_cast<int>(boundary.size()) - static_cast<int>(punctures.size());
}

int SurfaceComponent::num_special() const {
  int n = 0;
  for (const auto& c : boundary) n += static_cast<int>(c.size());
  return n;
}

int MarkedSurface::num_special() const {
  int n = 0;
  for (const auto& c : components) n += c.num_special();
  return n;
}

int MarkedSurface::num_punctures() const {
  int n = 0;
  for (const auto& c : components) n += static_cast<int>(c.punctures.size());
  return n;
}

bool MarkedSurface::is_puncture(int point) const {
  for (const auto& c : components)
    if (std::find(c.punctures.begin(), c.punctures.end(), point) != c.punctures.end()) return true;
  return false;
}

int MarkedSurface::expected_edges() const {
  int n = 0;
  for (const auto& c : components) n += -3 * c.euler_characteristic() + 2 * c.num_special();
  return n;
}

int MarkedSurface::expected_interior_edges() const {
  int n = 0;
  for (const auto& c : components) n += -3 * c.euler_characteristic() + c.num_special();
  return n;
}

int MarkedSurface::expected_triangles() const {
  int n = 0;
  for (const auto& c : components) n += -2 * c.euler_characteristic() + c.num_special();
  return n;
}

void validate_surface(const MarkedSurface& s) {
  if (s.components.empty()) throw Error(ErrorKind::ConditionViolated, "S2: empty surface");
  std::set<int> seen;
  for (std::size_t ci = 0; ci < s.components.size(); ++ci) {
    const auto& c = s.components[ci];
    if (c.genus < 0) throw Error(ErrorKind::InvalidInput, "negative genus");
    for (const auto& cyc : c.boundary)
      if (cyc.empty())
        throw Error(ErrorKind::ConditionViolated, "S1: boundary component without special points");
    if (-2 * c.euler_characteristic() + c.num_special() <= 0)
      throw Error(ErrorKind::ConditionViolated,
                  "S2: -2*chi + |M_boundary| = " +
                      std::to_string(-2 * c.euler_characteristic() + c.num_special()) + " <= 0");
    if (c.genus == 0 && c.boundary.size() == 1 && c.punctures.size() == 1 && c.num_special() == 1)
      throw Error(ErrorKind::ConditionViolated, "S3: once-punctured monogon");
    if (c.num_special() + c.punctures.size() == 0)
      throw Error(ErrorKind::ConditionViolated, "S2: no marked points");
    auto note = [&](int p) {
      if (!seen.insert(p).second)
        throw Error(ErrorKind::InvalidInput, "marked point id " + std::to_string(p) + " repeated");
    };
    for (int p : c.punctures) note(p);
    for (const auto& cyc : c.boundary)
      for (int p : cyc) note(p);
  }
}

MarkedSurface new_surface(int genus, int punctures, const std::vector<int>& boundary_counts) {
  SurfaceComponent c;
  c.genus = genus;
  int next = 0;
  for (int n : boundary_counts) {
    std::vector<int> cyc;
    for (int i = 0; i < n; ++i) cyc.push_back(next++);
    c.boundary.push_back(cyc);
  }
  for (int i = 0; i < punctures; ++i) c.punctures.push_back(next++);
  MarkedSurface s{{c}};
  validate_surface(s);
  return s;
}

MarkedSurface polygon_surface(int n) { return new_surface(0, 0, {n}); }

MarkedSurface disjoint_union(const MarkedSurface& a, const MarkedSurface& b) {
  int offset = 0;
  for (const auto& c : a.components) {
    for (int p : c.punctures) offset = std::max(offset, p + 1);
    for (const auto& cyc : c.boundary)
      for (int p : cyc) offset = std::max(offset, p + 1);
  }
  MarkedSurface out = a;
  for (auto c : b.components) {
    for (int& p : c.punctures) p += offset;
    for (auto& cyc : c.boundary)
      for (int& p : cyc) p += offset;
    out.components.push_back(c);
  }
  validate_surface(out);
  return out;
}

Triangulation::Triangulation(MarkedSurface s, std::vector<EdgeInfo> e, std::vector<Triangle> t)
    : surface(std::move(s)), edges(std::move(e)), triangles(std::move(t)) {
  rebuild_index();
}

void Triangulation::rebuild_index() {
  loc_.assign(edges.size(), {SideLocation{}, SideLocation{}});
  for (int t = 0; t < num_triangles(); ++t)
    for (int i = 0; i < 3; ++i) {
      const Side& s = triangles[t].sides[i];
      if (s.edge < 0 || s.edge >= num_edges() || (s.k != 0 && s.k != 1))
        throw Error(ErrorKind::InvalidInput, "triangle references an unknown side");
      loc_[s.edge][s.k] = {t, i};
    }
}

std::vector<int> Triangulation::ids() const {
  std::vector<int> out;
  for (const auto& e : edges) out.push_back(e.id);
  return out;
}

int Triangulation::index_of(int id) const {
  for (int i = 0; i < num_edges(); ++i)
    if (edges[i].id == id) return i;
  throw Error(ErrorKind::UnknownEdge, "edge id " + std::to_string(id));
}

bool Triangulation::has_id(int id) const {
  return std::any_of(edges.begin(), edges.end(), [&](const EdgeInfo& e) { return e.id == id; });
}

int Triangulation::max_id() const {
  int m = -1;
  for (const auto& e : edges) m = std::max(m, e.id);
  return m;
}

std::vector<int> Triangulation::interior_edges() const {
  std::vector<int> out;
  for (int i = 0; i < num_edges(); ++i)
    if (!edges[i].boundary) out.push_back(i);
  return out;
}

std::vector<int> Triangulation::boundary_edges() const {
  std::vector<int> out;
  for (int i = 0; i < num_edges(); ++i)
    if (edges[i].boundary) out.push_back(i);
  return out;
}

int Triangulation::side_start(Side s) const { return s.k == 0 ? edges[s.edge].mplus : edges[s.edge].mminus; }
int Triangulation::side_end(Side s) const { return s.k == 0 ? edges[s.edge].mminus : edges[s.edge].mplus; }

Corner Triangulation::rotate_cw(Corner c) const {
  Side s = side_at(c.tri, c.pos + 1);
  if (edges[s.edge].boundary) return {};
  SideLocation l = locate(s.twin());
  return {l.tri, l.pos};
}

Corner Triangulation::rotate_ccw(Corner c) const {
  Side s = side_at(c.tri, c.pos);
  if (edges[s.edge].boundary) return {};
  SideLocation l = locate(s.twin());
  return {l.tri, (l.pos + 2) % 3};
}

int Triangulation::interval_starting_at(int point) const {
  for (int i = 0; i < num_edges(); ++i)
    if (edges[i].boundary && edges[i].mplus == point) return i;
  throw Error(ErrorKind::InvalidInput, "no boundary interval starts at point " + std::to_string(point));
}

int Triangulation::interval_ending_at(int point) const {
  for (int i = 0; i < num_edges(); ++i)
    if (edges[i].boundary && edges[i].mminus == point) return i;
  throw Error(ErrorKind::InvalidInput, "no boundary interval ends at point " + std::to_string(point));
}

std::vector<Corner> Triangulation::corners_at_special(int point) const {
  int start = interval_ending_at(point);
  SideLocation l = locate({start, 0});
  std::vector<Corner> out;
  Corner c{l.tri, l.pos};
  while (c.tri >= 0) {
    out.push_back(c);
    if (static_cast<int>(out.size()) > 3 * num_triangles())
      throw Error(ErrorKind::InvalidInput, "corner rotation does not terminate");
    c = rotate_cw(c);
  }
  return out;
}

void Triangulation::validate() const {
  std::vector<std::array<int, 2>> count(edges.size(), {0, 0});
  for (const auto& t : triangles)
    for (int i = 0; i < 3; ++i) {
      const Side& s = t.sides[i];
      if (s.edge < 0 || s.edge >= num_edges() || (s.k != 0 && s.k != 1))
        throw Error(ErrorKind::InvalidInput, "triangle references an unknown side");
      count[s.edge][s.k]++;
    }
  std::set<int> idset;
  for (int e = 0; e < num_edges(); ++e) {
    if (!idset.insert(edges[e].id).second)
      throw Error(ErrorKind::InvalidInput, "edge id " + std::to_string(edges[e].id) + " repeated");
    int want1 = edges[e].boundary ? 0 : 1;
    if (count[e][0] != 1 || count[e][1] != want1)
      throw Error(ErrorKind::InvalidInput,
                  "edge " + std::to_string(edges[e].id) + " sides are not each in exactly one triangle");
  }
  for (const auto& t : triangles) {
    if (t.sides[0].edge == t.sides[1].edge || t.sides[1].edge == t.sides[2].edge ||
        t.sides[0].edge == t.sides[2].edge)
      throw Error(ErrorKind::WouldSelfFold, "self-folded triangle");
    for (int i = 0; i < 3; ++i) {
      Side s = t.sides[i];
      if (side_start(s) != t.corners[(i + 2) % 3] || side_end(s) != t.corners[i])
        throw Error(ErrorKind::InvalidInput,
                    "edge " + std::to_string(edges[s.edge].id) + " endpoints disagree with its triangle");
    }
  }
  if (num_edges() != surface.expected_edges() ||
      static_cast<int>(interior_edges().size()) != surface.expected_interior_edges() ||
      num_triangles() != surface.expected_triangles())
    throw Error(ErrorKind::InvalidInput, "edge or triangle count does not match the surface");
  // Boundary intervals must be exactly the consecutive pairs of the cycles.
  std::set<std::pair<int, int>> want, have;
  for (const auto& c : surface.components)
    for (const auto& cyc : c.boundary)
      for (std::size_t i = 0; i < cyc.size(); ++i) want.insert({cyc[i], cyc[(i + 1) % cyc.size()]});
  for (const auto& e : edges)
    if (e.boundary) have.insert({e.mplus, e.mminus});
  if (want != have) throw Error(ErrorKind::InvalidInput, "boundary intervals do not match the surface");
}

namespace {

struct Letter {
  int edge;
  bool forward;
  int from, to;
};

}  // namespace

Triangulation initial_triangulation(const MarkedSurface& s) {
  validate_surface(s);
  std::vector<EdgeInfo> edges;
  std::vector<Triangle> triangles;
  // Boundary intervals of all components come first.
  std::vector<std::vector<std::vector<int>>> interval(s.components.size());
  for (std::size_t ci = 0; ci < s.components.size(); ++ci)
    for (const auto& cyc : s.components[ci].boundary) {
      std::vector<int> ids;
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        ids.push_back(static_cast<int>(edges.size()));
        edges.push_back({static_cast<int>(edges.size()), true, cyc[i], cyc[(i + 1) % cyc.size()]});
      }
      interval[ci].push_back(ids);
    }
  for (std::size_t ci = 0; ci < s.components.size(); ++ci) {
    const auto& c = s.components[ci];
    std::vector<Letter> word;
    auto new_edge = [&](int from, int to) {
      int e = static_cast<int>(edges.size());
      edges.push_back({e, false, from, to});
      return e;
    };
    int base;
    std::size_t first_puncture = 0;
    if (!c.boundary.empty()) {
      const auto& cyc = c.boundary[0];
      base = cyc[0];
      for (std::size_t i = 0; i < cyc.size(); ++i)
        word.push_back({interval[ci][0][i], true, cyc[i], cyc[(i + 1) % cyc.size()]});
    } else {
      base = c.punctures[0];
      first_puncture = 1;
    }
    for (std::size_t i = first_puncture; i < c.punctures.size(); ++i) {
      int p = c.punctures[i];
      int e = new_edge(base, p);
      word.push_back({e, true, base, p});
      word.push_back({e, false, p, base});
    }
    for (std::size_t j = 1; j < c.boundary.size(); ++j) {
      const auto& cyc = c.boundary[j];
      int e = new_edge(base, cyc[0]);
      word.push_back({e, true, base, cyc[0]});
      for (std::size_t i = 0; i < cyc.size(); ++i)
        word.push_back({interval[ci][j][i], true, cyc[i], cyc[(i + 1) % cyc.size()]});
      word.push_back({e, false, cyc[0], base});
    }
    for (int h = 0; h < c.genus; ++h) {
      int a = new_edge(base, base), b = new_edge(base, base);
      word.push_back({a, true, base, base});
      word.push_back({b, true, base, base});
      word.push_back({a, false, base, base});
      word.push_back({b, false, base, base});
    }
    const int N = static_cast<int>(word.size());
    // Fan from the first rotation whose end triangles are not self-folded.
    int rot = -1;
    for (int r = 0; r < N && rot < 0; ++r) {
      auto L = [&](int k) { return word[(k + r) % N]; };
      bool ok = L(0).edge != L(1).edge && L(N - 2).edge != L(N - 1).edge;
      if (N == 3) ok = ok && L(0).edge != L(2).edge;
      if (ok) rot = r;
    }
    if (rot < 0) throw Error(ErrorKind::WouldSelfFold, "no fan triangulation without self-folded triangles");
    std::vector<Letter> w(N);
    for (int k = 0; k < N; ++k) w[k] = word[(k + rot) % N];
    auto side_of = [](const Letter& l) { return Side{l.edge, l.forward ? 0 : 1}; };
    std::vector<int> diag(N, -1);
    for (int k = 2; k <= N - 2; ++k) diag[k] = new_edge(w[0].from, w[k].from);
    for (int k = 1; k <= N - 2; ++k) {
      Triangle t;
      t.sides[0] = (k + 1 == N - 1) ? side_of(w[N - 1]) : Side{diag[k + 1], 1};
      t.sides[1] = (k == 1) ? side_of(w[0]) : Side{diag[k], 0};
      t.sides[2] = side_of(w[k]);
      t.corners = {w[0].from, w[k].from, w[k + 1].from};
      triangles.push_back(t);
    }
  }
  Triangulation t(s, edges, triangles);
  t.validate();
  return t;
}

Quad quad_of(const Triangulation& t, int e) {
  if (t.is_boundary(e))
    throw Error(ErrorKind::NotInterior, "edge " + std::to_string(t.edges[e].id) + " is a boundary interval");
  Quad q;
  SideLocation l1 = t.locate({e, 0}), l2 = t.locate({e, 1});
  q.t1 = l1.tri;
  q.p1 = l1.pos;
  q.t2 = l2.tri;
  q.p2 = l2.pos;
  q.b = t.side_at(q.t1, q.p1 + 1);
  q.a = t.side_at(q.t1, q.p1 + 2);
  q.d = t.side_at(q.t2, q.p2 + 1);
  q.c = t.side_at(q.t2, q.p2 + 2);
  return q;
}

FlipResult flip(const Triangulation& t, int edge_id) {
  int e = t.index_of(edge_id);
  Quad q = quad_of(t, e);
  if (q.t1 == q.t2) throw Error(ErrorKind::WouldSelfFold, "edge lies in a self-folded triangle");
  if (q.c.edge == q.b.edge || q.a.edge == q.d.edge)
    throw Error(ErrorKind::WouldSelfFold, "flip of edge " + std::to_string(edge_id) + " creates a self-folded triangle");
  int u0 = t.corner_point(q.t1, q.p1), u1 = t.corner_point(q.t1, q.p1 + 1),
      u2 = t.corner_point(q.t1, q.p1 + 2), w1 = t.corner_point(q.t2, q.p2 + 1);
  FlipResult r;
  r.tri = t;
  r.new_id = t.max_id() + 1;
  r.tri.edges[e] = {r.new_id, false, u1, w1};
  r.tri.triangles[q.t1] = Triangle{{Side{e, 0}, q.c, q.b}, {w1, u0, u1}};
  r.tri.triangles[q.t2] = Triangle{{Side{e, 1}, q.a, q.d}, {u1, u2, w1}};
  r.tri.rebuild_index();
  for (const auto& ed : t.edges) r.relabel[ed.id] = ed.id;
  r.relabel[edge_id] = r.new_id;
  return r;
}

namespace {

std::multiset<std::array<int, 3>> triangle_set(const Triangulation& t, const EdgeRelabeling& relabel) {
  std::multiset<std::array<int, 3>> out;
  for (const auto& tr : t.triangles) {
    std::array<int, 3> ids;
    for (int i = 0; i < 3; ++i) {
      int id = t.edges[tr.sides[i].edge].id;
      auto it = relabel.find(id);
      ids[i] = it == relabel.end() ? id : it->second;
    }
    int m = static_cast<int>(std::min_element(ids.begin(), ids.end()) - ids.begin());
    out.insert({ids[m], ids[(m + 1) % 3], ids[(m + 2) % 3]});
  }
  return out;
}

}  // namespace

bool same_triangulation(const Triangulation& a, const Triangulation& b, const EdgeRelabeling& relabel) {
  return triangle_set(a, relabel) == triangle_set(b, {});
}

std::vector<int> match_triangulations(const Triangulation& a, const Triangulation& b) {
  if (a.num_edges() != b.num_edges() || a.num_triangles() != b.num_triangles()) return {};
  std::map<Side, Side> side_map;
  std::vector<int> tri_map(a.num_triangles(), -1), tri_rot(a.num_triangles(), 0);
  std::vector<std::pair<Side, Side>> queue;
  for (int e : a.boundary_edges()) {
    if (!b.has_id(a.edges[e].id)) return {};
    int f = b.index_of(a.edges[e].id);
    if (!b.is_boundary(f)) return {};
    queue.push_back({Side{e, 0}, Side{f, 0}});
  }
  while (!queue.empty()) {
    auto [sa, sb] = queue.back();
    queue.pop_back();
    auto it = side_map.find(sa);
    if (it != side_map.end()) {
      if (!(it->second == sb)) return {};
      continue;
    }
    side_map[sa] = sb;
    if (!a.is_boundary(sa.edge)) {
      if (b.is_boundary(sb.edge)) return {};
      queue.push_back({sa.twin(), sb.twin()});
    }
    SideLocation la = a.locate(sa), lb = b.locate(sb);
    int rot = (lb.pos - la.pos + 3) % 3;
    if (tri_map[la.tri] >= 0) {
      if (tri_map[la.tri] != lb.tri || tri_rot[la.tri] != rot) return {};
      continue;
    }
    tri_map[la.tri] = lb.tri;
    tri_rot[la.tri] = rot;
    for (int i = 0; i < 3; ++i) queue.push_back({a.side_at(la.tri, i), b.side_at(lb.tri, i + rot)});
  }
  std::vector<int> perm(a.num_edges(), -1);
  for (const auto& [sa, sb] : side_map) {
    if (sa.k != sb.k && (a.is_boundary(sa.edge))) return {};
    if (perm[sa.edge] >= 0 && perm[sa.edge] != sb.edge) return {};
    perm[sa.edge] = sb.edge;
  }
  for (int x : perm)
    if (x < 0) return {};
  std::vector<int> sorted(perm);
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
    if (sorted[i] != i) return {};
  return perm;
}

ExchangeData exchange_data(const Triangulation& t) {
  const int n = t.num_edges();
  ExchangeData d;
  d.epsilon = Eigen::MatrixXi::Zero(n, n);
  d.m = Eigen::MatrixXi::Zero(n, n);
  for (const auto& tr : t.triangles)
    for (int i = 0; i < 3; ++i) {
      int x = tr.sides[i].edge, y = tr.sides[(i + 1) % 3].edge;
      d.epsilon(x, y) += 1;
      d.epsilon(y, x) -= 1;
    }
  for (int e = 0; e < n; ++e)
    if (t.is_boundary(e)) d.m(e, e) = -1;
  d.p = d.epsilon + d.m;
  return d;
}

namespace {

struct IntervalPos {
  int comp = -1, cycle = -1, index = -1;
};

IntervalPos find_interval(const MarkedSurface& s, int mplus, int mminus) {
  for (std::size_t c = 0; c < s.components.size(); ++c)
    for (std::size_t j = 0; j < s.components[c].boundary.size(); ++j) {
      const auto& cyc = s.components[c].boundary[j];
      for (std::size_t i = 0; i < cyc.size(); ++i)
        if (cyc[i] == mplus && cyc[(i + 1) % cyc.size()] == mminus)
          return {static_cast<int>(c), static_cast<int>(j), static_cast<int>(i)};
    }
  throw Error(ErrorKind::InvalidInput, "boundary interval not found on the surface");
}

}  // namespace

GlueResult glue_surface(const Triangulation& t, int left_id, int right_id) {
  if (left_id == right_id) throw Error(ErrorKind::SameEdge, "cannot glue an interval to itself");
  const int L = t.index_of(left_id), R = t.index_of(right_id);
  if (!t.is_boundary(L) || !t.is_boundary(R))
    throw Error(ErrorKind::InvalidInput, "only boundary intervals can be glued");
  SideLocation lL = t.locate({L, 0}), lR = t.locate({R, 0});
  if (lL.tri == lR.tri) throw Error(ErrorKind::WouldSelfFold, "glued intervals lie in one triangle");

  const EdgeInfo eL = t.edges[L], eR = t.edges[R];
  // Point identification m+_L ~ m-_R and m-_L ~ m+_R, representative = min id.
  std::map<int, int> rep;
  auto find = [&](int p) {
    while (rep.count(p) && rep[p] != p) p = rep[p];
    return p;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    rep[b] = a;
    rep[a] = a;
  };
  unite(eL.mplus, eR.mminus);
  unite(eL.mminus, eR.mplus);

  IntervalPos pL = find_interval(t.surface, eL.mplus, eL.mminus);
  IntervalPos pR = find_interval(t.surface, eR.mplus, eR.mminus);
  const auto& comps = t.surface.components;
  auto intervals_after = [&](const std::vector<int>& cyc, int from, int to) {
    // Intervals from index `from` up to but excluding `to`, cyclically.
    std::vector<std::pair<int, int>> out;
    const int n = static_cast<int>(cyc.size());
    for (int i = from % n; i != to % n; i = (i + 1) % n) out.push_back({cyc[i], cyc[(i + 1) % n]});
    return out;
  };
  std::vector<std::vector<std::pair<int, int>>> new_cycles;
  SurfaceComponent merged;
  if (pL.comp == pR.comp && pL.cycle == pR.cycle) {
    const auto& cyc = comps[pL.comp].boundary[pL.cycle];
    const int n = static_cast<int>(cyc.size());
    merged = comps[pL.comp];
    new_cycles.push_back(intervals_after(cyc, pL.index + 1, pR.index));
    new_cycles.push_back(intervals_after(cyc, pR.index + 1, pL.index));
    (void)n;
  } else {
    const auto& cL = comps[pL.comp].boundary[pL.cycle];
    const auto& cR = comps[pR.comp].boundary[pR.cycle];
    auto restL = intervals_after(cL, pL.index + 1, pL.index);
    auto restR = intervals_after(cR, pR.index + 1, pR.index);
    restL.insert(restL.end(), restR.begin(), restR.end());
    new_cycles.push_back(restL);
    merged = comps[pL.comp];
    if (pL.comp != pR.comp) {
      const auto& other = comps[pR.comp];
      merged.genus += other.genus;
      merged.punctures.insert(merged.punctures.end(), other.punctures.begin(), other.punctures.end());
      for (std::size_t j = 0; j < other.boundary.size(); ++j)
        merged.boundary.push_back(other.boundary[j]);
    } else {
      merged.genus += 1;
    }
  }
  // Drop the glued cycles, then add the rebuilt ones.
  std::vector<std::vector<int>> kept;
  const auto& cL = comps[pL.comp].boundary[pL.cycle];
  const auto& cR = comps[pR.comp].boundary[pR.cycle];
  for (const auto& cyc : merged.boundary)
    if (cyc != cL && cyc != cR) kept.push_back(cyc);
  GlueResult res;
  for (const auto& ivs : new_cycles) {
    if (ivs.empty()) {
      int p = find(eL.mplus);
      // An empty cycle closes up at the shared endpoint of the two intervals.
      if (pL.comp == pR.comp && pL.cycle == pR.cycle) {
        p = (&ivs == &new_cycles[0]) ? find(eL.mminus) : find(eR.mminus);
      }
      merged.punctures.push_back(p);
      res.new_punctures.push_back(p);
      continue;
    }
    std::vector<int> pts;
    for (const auto& [a, b] : ivs) pts.push_back(find(a));
    kept.push_back(pts);
  }
  merged.boundary = kept;

  MarkedSurface s;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (static_cast<int>(c) == pL.comp)
      s.components.push_back(merged);
    else if (static_cast<int>(c) != pR.comp)
      s.components.push_back(comps[c]);
  }
  validate_surface(s);

  // Edges: survivors keep their order, alpha_bar is appended.
  std::vector<int> newpos(t.num_edges(), -1);
  std::vector<EdgeInfo> edges;
  for (int e = 0; e < t.num_edges(); ++e) {
    if (e == L || e == R) continue;
    newpos[e] = static_cast<int>(edges.size());
    EdgeInfo info = t.edges[e];
    info.mplus = find(info.mplus);
    info.mminus = find(info.mminus);
    edges.push_back(info);
  }
  const int abar = static_cast<int>(edges.size());
  res.alpha_bar = t.max_id() + 1;
  edges.push_back({res.alpha_bar, false, find(eL.mplus), find(eL.mminus)});
  std::vector<Triangle> tris;
  for (const auto& tr : t.triangles) {
    Triangle n;
    for (int i = 0; i < 3; ++i) {
      Side sd = tr.sides[i];
      if (sd.edge == L)
        n.sides[i] = {abar, 0};
      else if (sd.edge == R)
        n.sides[i] = {abar, 1};
      else
        n.sides[i] = {newpos[sd.edge], sd.k};
      n.corners[i] = find(tr.corners[i]);
    }
    tris.push_back(n);
  }
  res.tri = Triangulation(s, edges, tris);
  res.tri.validate();
  for (const auto& e : t.edges) res.edge_map[e.id] = e.id;
  res.edge_map[left_id] = res.alpha_bar;
  res.edge_map[right_id] = res.alpha_bar;
  for (const auto& c : comps) {
    for (int p : c.punctures) res.point_map[p] = find(p);
    for (const auto& cyc : c.boundary)
      for (int p : cyc) res.point_map[p] = find(p);
  }
  return res;
}

}  // namespace surfcluster
