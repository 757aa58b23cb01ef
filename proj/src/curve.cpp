#include "surfcluster/curve.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "surfcluster/error.hpp"

namespace surfcluster {

namespace {

int mod3(int x) { return ((x % 3) + 3) % 3; }

Error invalid(const std::string& what) { return Error(ErrorKind::InvalidInput, what); }

// Corner opposite side position i.
int opposite_corner(int i) { return mod3(i + 1); }

int point_of_vertex(const Triangulation& t, int tri, int code) { return t.corner_point(tri, code_corner(code)); }

// Number of corners around a marked point, starting from a known corner.
int degree_from(const Triangulation& t, Corner start) {
  int n = 0;
  Corner c = start;
  do {
    ++n;
    c = t.rotate_cw(c);
    if (c.tri < 0) throw invalid("degree requested at a special point");
    if (n > 3 * t.num_triangles()) throw invalid("corner rotation does not terminate");
  } while (!(c == start));
  return n;
}

}  // namespace

CurveEnd start_of(const Curve& c, const Triangulation& t) {
  if (c.loop) throw Error(ErrorKind::NotLoop, "closed curve has no endpoints");
  if (c.is_edge()) return {EndKind::Vertex, -1, t.edges[c.along_edge].mplus};
  const Segment& s = c.segs.front();
  if (is_vertex_code(s.in)) return {EndKind::Vertex, -1, point_of_vertex(t, s.tri, s.in)};
  Side side = t.side_at(s.tri, s.in);
  return {EndKind::Boundary, side.edge, t.side_end(side)};
}

CurveEnd end_of(const Curve& c, const Triangulation& t) {
  if (c.loop) throw Error(ErrorKind::NotLoop, "closed curve has no endpoints");
  if (c.is_edge()) return {EndKind::Vertex, -1, t.edges[c.along_edge].mminus};
  const Segment& s = c.segs.back();
  if (is_vertex_code(s.out)) return {EndKind::Vertex, -1, point_of_vertex(t, s.tri, s.out)};
  Side side = t.side_at(s.tri, s.out);
  return {EndKind::Boundary, side.edge, t.side_start(side)};
}

int segment_corner(const Segment& s) {
  if (is_vertex_code(s.in) || is_vertex_code(s.out)) throw invalid("segment ends at a vertex");
  return mod3(s.out - s.in) == 1 ? s.in : s.out;
}

char segment_turn(const Segment& s) {
  if (is_vertex_code(s.in) || is_vertex_code(s.out)) throw invalid("segment ends at a vertex");
  return mod3(s.out - s.in) == 1 ? 'R' : 'L';
}

void validate_curve(const Curve& c, const Triangulation& t) {
  if (c.is_edge()) {
    if (c.loop || !c.segs.empty() || c.along_edge >= t.num_edges()) throw invalid("malformed edge curve");
    return;
  }
  if (c.segs.empty()) throw invalid("curve has no segments");
  const int n = static_cast<int>(c.segs.size());
  for (int j = 0; j < n; ++j) {
    const Segment& s = c.segs[j];
    if (s.tri < 0 || s.tri >= t.num_triangles()) throw invalid("segment in unknown triangle");
    if (s.in < -3 || s.in > 2 || s.out < -3 || s.out > 2) throw invalid("segment position out of range");
    if (s.in == s.out) throw Error(ErrorKind::NotMinimalPosition, "curve backtracks through one side");
    bool vin = is_vertex_code(s.in), vout = is_vertex_code(s.out);
    if (vin && vout) throw invalid("segment joins two vertices");
    if (vin && (c.loop || j != 0)) throw invalid("vertex inside a curve");
    if (vout && (c.loop || j != n - 1)) throw invalid("vertex inside a curve");
    if (vin && code_corner(s.in) != opposite_corner(s.out))
      throw Error(ErrorKind::NotMinimalPosition, "vertex end adjacent to its side");
    if (vout && code_corner(s.out) != opposite_corner(s.in))
      throw Error(ErrorKind::NotMinimalPosition, "vertex end adjacent to its side");
    if (!c.loop && j == 0 && !vin && !t.is_boundary(t.side_at(s.tri, s.in).edge))
      throw invalid("arc starts inside the surface");
    if (!vout) {
      Side out = t.side_at(s.tri, s.out);
      bool last = !c.loop && j == n - 1;
      if (t.is_boundary(out.edge)) {
        if (!last) throw invalid("curve leaves through a boundary interval");
        continue;
      }
      if (last) throw invalid("arc ends inside the surface");
      const Segment& nx = c.segs[(j + 1) % n];
      SideLocation l = t.locate(out.twin());
      if (nx.tri != l.tri || nx.in != l.pos) throw invalid("consecutive segments do not share a side");
    }
  }
}

Curve reversed(const Curve& c) {
  Curve r = c;
  std::reverse(r.segs.begin(), r.segs.end());
  for (auto& s : r.segs) std::swap(s.in, s.out);
  return r;
}

bool has_vertex_end(const Curve& c) {
  if (c.loop) return false;
  if (c.is_edge()) return true;
  return is_vertex_code(c.segs.front().in) || is_vertex_code(c.segs.back().out);
}

bool is_boundary_arc(const Curve& c, const Triangulation&) { return !has_vertex_end(c); }

std::vector<int> crossing_counts(const Curve& c, const Triangulation& t) {
  std::vector<int> n(t.num_edges(), 0);
  if (c.is_edge()) return n;
  for (const auto& s : c.segs)
    if (!is_vertex_code(s.out)) n[t.side_at(s.tri, s.out).edge]++;
  if (!c.loop && !is_vertex_code(c.segs.front().in)) n[t.side_at(c.segs.front().tri, c.segs.front().in).edge]++;
  return n;
}

namespace {

std::vector<int> flatten(const std::vector<Segment>& segs, int flag) {
  std::vector<int> k{flag};
  for (const auto& s : segs) {
    k.push_back(s.tri);
    k.push_back(s.in);
    k.push_back(s.out);
  }
  return k;
}

}  // namespace

std::vector<int> canonical_key(const Curve& c) {
  if (c.is_edge()) return {-100, c.along_edge};
  const Curve r = reversed(c);
  if (!c.loop) return std::min(flatten(c.segs, 0), flatten(r.segs, 0));
  std::vector<int> best;
  for (const auto* src : {&c.segs, &r.segs}) {
    std::vector<Segment> v = *src;
    for (std::size_t i = 0; i < v.size(); ++i) {
      auto k = flatten(v, 1);
      if (best.empty() || k < best) best = k;
      std::rotate(v.begin(), v.begin() + 1, v.end());
    }
  }
  return best;
}

bool same_curve(const Curve& a, const Curve& b) { return canonical_key(a) == canonical_key(b); }

int peripheral_point(const Curve& c, const Triangulation& t) {
  if (c.is_edge() || has_vertex_end(c)) return -1;
  char dir = segment_turn(c.segs.front());
  for (const auto& s : c.segs)
    if (segment_turn(s) != dir) return -1;
  const Segment& s = c.segs.front();
  return t.corner_point(s.tri, segment_corner(s));
}

bool is_peripheral(const Curve& c, const Triangulation& t) { return peripheral_point(c, t) >= 0; }

Curve normalize_vertex_ends(Curve c, const Triangulation& t) {
  if (c.loop || c.is_edge()) return c;
  for (int guard = 0;; ++guard) {
    if (guard > 4 * t.num_triangles() + 8 + static_cast<int>(c.segs.size()))
      throw invalid("vertex normalization does not terminate");
    if (c.segs.empty()) throw invalid("empty curve");
    Segment& f = c.segs.front();
    if (is_vertex_code(f.in) && is_vertex_code(f.out)) {
      if (c.segs.size() != 1) throw invalid("vertex inside a curve");
      int c1 = code_corner(f.in), c2 = code_corner(f.out);
      if (c1 == c2) throw Error(ErrorKind::NotMinimalPosition, "arc contracts to a point");
      int side = mod3(c2 - c1) == 1 ? c2 : c1;
      return Curve{false, {}, t.side_at(f.tri, side).edge};
    }
    if (is_vertex_code(f.in)) {
      int cv = code_corner(f.in), o = f.out;
      if (cv != opposite_corner(o)) {
        if (c.segs.size() == 1) throw Error(ErrorKind::NotMinimalPosition, "arc isotopic into the boundary");
        int j = c.segs[1].in;
        int nc = cv == o ? mod3(j + 2) : j;
        c.segs.erase(c.segs.begin());
        c.segs.front().in = vertex_code(nc);
        continue;
      }
    }
    Segment& l = c.segs.back();
    if (is_vertex_code(l.out)) {
      int cv = code_corner(l.out), i = l.in;
      if (cv != opposite_corner(i)) {
        if (c.segs.size() == 1) throw Error(ErrorKind::NotMinimalPosition, "arc isotopic into the boundary");
        int j = c.segs[c.segs.size() - 2].out;
        int nc = cv == i ? mod3(j + 2) : j;
        c.segs.pop_back();
        c.segs.back().out = vertex_code(nc);
        continue;
      }
    }
    return c;
  }
}

CurveWord to_word(const Curve& c, const Triangulation& t) {
  CurveWord w;
  w.loop = c.loop;
  auto sid = [&](int tri, int pos) {
    Side s = t.side_at(tri, pos);
    return 2 * t.edges[s.edge].id + s.k;
  };
  if (c.is_edge()) {
    w.along_edge_id = t.edges[c.along_edge].id;
    return w;
  }
  const Segment& f = c.segs.front();
  if (!c.loop) {
    if (is_vertex_code(f.in))
      w.start_vertex = true;
    else
      w.sides.push_back(sid(f.tri, f.in));
  }
  for (const auto& s : c.segs) {
    if (is_vertex_code(s.out))
      w.end_vertex = true;
    else
      w.sides.push_back(sid(s.tri, s.out));
  }
  return w;
}

Curve from_word(const CurveWord& w, const Triangulation& t) {
  if (w.along_edge_id >= 0) return edge_curve(t.index_of(w.along_edge_id));
  std::vector<Side> sides;
  for (int x : w.sides) {
    if (x < 0) throw invalid("negative side id");
    sides.push_back({t.index_of(x / 2), x % 2});
  }
  for (const auto& s : sides)
    if (s.k == 1 && t.is_boundary(s.edge)) throw invalid("boundary interval has no side 1");
  Curve c;
  c.loop = w.loop;
  if (w.loop) {
    if (sides.empty()) throw invalid("empty loop");
    const int n = static_cast<int>(sides.size());
    for (int j = 0; j < n; ++j) {
      SideLocation out = t.locate(sides[j]);
      if (t.is_boundary(sides[j].edge)) throw invalid("loop meets the boundary");
      SideLocation in = t.locate(sides[(j + n - 1) % n].twin());
      if (in.tri != out.tri) throw invalid("word is not a chain of adjacent sides");
      c.segs.push_back({out.tri, in.pos, out.pos});
    }
    validate_curve(c, t);
    return c;
  }
  std::size_t idx = 0;
  int tri, in;
  if (w.start_vertex) {
    if (sides.empty()) throw invalid("vertex-to-vertex word needs along_edge");
    SideLocation l = t.locate(sides[0]);
    tri = l.tri;
    in = vertex_code(opposite_corner(l.pos));
  } else {
    if (sides.empty()) throw invalid("empty arc");
    if (!t.is_boundary(sides[0].edge)) throw invalid("arc does not start on the boundary");
    SideLocation l = t.locate(sides[0]);
    tri = l.tri;
    in = l.pos;
    idx = 1;
  }
  bool closed = false;
  for (; idx < sides.size(); ++idx) {
    if (closed) throw invalid("word continues past the boundary");
    SideLocation l = t.locate(sides[idx]);
    if (l.tri != tri) throw invalid("word is not a chain of adjacent sides");
    c.segs.push_back({tri, in, l.pos});
    if (t.is_boundary(sides[idx].edge)) {
      closed = true;
    } else {
      SideLocation n = t.locate(sides[idx].twin());
      tri = n.tri;
      in = n.pos;
    }
  }
  if (w.end_vertex) {
    if (closed) throw invalid("word ends on the boundary and at a vertex");
    if (is_vertex_code(in)) throw invalid("vertex-to-vertex word needs along_edge");
    c.segs.push_back({tri, in, vertex_code(opposite_corner(in))});
  } else if (!closed) {
    throw invalid("arc does not end on the boundary");
  }
  validate_curve(c, t);
  return c;
}

Curve edge_curve(int edge) { return Curve{false, {}, edge}; }

namespace {

// Counterclockwise corners at a special point from beta (the interval
// starting there) up to, excluding, the given corner.
std::vector<Segment> ccw_from_beta(const Triangulation& t, int point, Corner stop) {
  auto cs = t.corners_at_special(point);
  auto it = std::find(cs.begin(), cs.end(), stop);
  if (it == cs.end()) throw invalid("corner not at the expected point");
  std::vector<Segment> out;
  for (auto r = cs.end(); r != it + 1;) {
    --r;
    out.push_back({r->tri, mod3(r->pos + 1), r->pos});
  }
  return out;
}

// Clockwise corners at a special point after the given one, ending on beta.
std::vector<Segment> cw_to_beta(const Triangulation& t, int point, Corner from) {
  auto cs = t.corners_at_special(point);
  auto it = std::find(cs.begin(), cs.end(), from);
  if (it == cs.end()) throw invalid("corner not at the expected point");
  std::vector<Segment> out;
  for (++it; it != cs.end(); ++it) out.push_back({it->tri, it->pos, mod3(it->pos + 1)});
  return out;
}

void require_special(const Triangulation& t, int point) {
  if (t.surface.is_puncture(point))
    throw Error(ErrorKind::EndpointAtPuncture, "arc ends at puncture " + std::to_string(point));
}

}  // namespace

Curve b_shift_edge(int e, const Triangulation& t) {
  SideLocation a = t.locate({e, 0});
  if (t.is_boundary(e)) {
    Curve c;
    c.segs.push_back({a.tri, a.pos, mod3(a.pos + 1)});
    auto rest = cw_to_beta(t, t.edges[e].mminus, {a.tri, a.pos});
    c.segs.insert(c.segs.end(), rest.begin(), rest.end());
    return c;
  }
  SideLocation b = t.locate({e, 1});
  int p = t.corner_point(a.tri, a.pos), q = t.corner_point(b.tri, b.pos);
  require_special(t, p);
  require_special(t, q);
  Curve c;
  c.segs = ccw_from_beta(t, p, {a.tri, a.pos});
  c.segs.push_back({a.tri, mod3(a.pos + 1), a.pos});
  c.segs.push_back({b.tri, b.pos, mod3(b.pos + 1)});
  auto rest = cw_to_beta(t, q, {b.tri, b.pos});
  c.segs.insert(c.segs.end(), rest.begin(), rest.end());
  validate_curve(c, t);
  return c;
}

Curve b_shift(const Curve& arc, const Triangulation& t) {
  if (arc.is_edge()) return b_shift_edge(arc.along_edge, t);
  if (arc.loop || !has_vertex_end(arc)) throw invalid("b-shift expects an ideal arc");
  const Segment& f = arc.segs.front();
  const Segment& l = arc.segs.back();
  if (!is_vertex_code(f.in) || !is_vertex_code(l.out)) throw invalid("ideal arc must end at marked points on both sides");
  int cf = code_corner(f.in), cl = code_corner(l.out);
  int p = t.corner_point(f.tri, cf), q = t.corner_point(l.tri, cl);
  require_special(t, p);
  require_special(t, q);
  Curve c;
  c.segs = ccw_from_beta(t, p, {f.tri, cf});
  std::vector<Segment> mid = arc.segs;
  mid.front().in = mod3(cf + 1);
  mid.back().out = mod3(cl + 1);
  c.segs.insert(c.segs.end(), mid.begin(), mid.end());
  auto rest = cw_to_beta(t, q, {l.tri, cl});
  c.segs.insert(c.segs.end(), rest.begin(), rest.end());
  validate_curve(c, t);
  return c;
}

Curve m_shift(const Curve& arc, const Triangulation& t) {
  if (arc.loop || arc.is_edge() || has_vertex_end(arc))
    throw Error(ErrorKind::NotBoundaryEnded, "m-shift expects an arc with both ends on the boundary");
  Curve c = arc;
  c.segs.front().in = vertex_code(mod3(c.segs.front().in + 2));
  c.segs.back().out = vertex_code(mod3(c.segs.back().out + 2));
  c = normalize_vertex_ends(c, t);
  validate_curve(c, t);
  return c;
}

Curve renormalize(const Curve& c, const Triangulation& t, int edge_id) {
  FlipResult f = flip(t, edge_id);
  return renormalize(c, t, f, t.index_of(edge_id));
}

Curve renormalize(const Curve& c, const Triangulation& t, const FlipResult& f, int e) {
  if (c.is_edge() && c.along_edge != e) return c;
  Quad q = quad_of(t, e);
  const Triangulation& nt = f.tri;
  enum Label { U0, U1, U2, W1 };
  auto old_label = [&](int tri, int corner) -> int {
    if (tri == q.t1) {
      int d = mod3(corner - q.p1);
      return d == 0 ? U0 : d == 1 ? U1 : U2;
    }
    int d = mod3(corner - q.p2);
    return d == 0 ? U2 : d == 1 ? W1 : U0;
  };
  // New slots: t1 = (kappa', c, b) with corners (W1, U0, U1),
  // t2 = (kappa', a, d) with corners (U1, U2, W1).
  auto new_corner = [&](int tri, int label) -> int {
    static const int c1[4] = {1, 2, -1, 0};
    static const int c2[4] = {-1, 0, 1, 2};
    return tri == q.t1 ? c1[label] : c2[label];
  };
  struct Tok {
    bool vertex;
    Side side;
    int label;
  };
  auto token = [&](int tri, int code) -> Tok {
    if (is_vertex_code(code)) return {true, {}, old_label(tri, code_corner(code))};
    return {false, t.side_at(tri, code), -1};
  };
  auto tris_of = [&](const Tok& x) -> std::vector<int> {
    if (!x.vertex) return {nt.locate(x.side).tri};
    std::vector<int> r;
    for (int tr : {q.t1, q.t2})
      if (new_corner(tr, x.label) >= 0) r.push_back(tr);
    return r;
  };
  auto code_in = [&](const Tok& x, int tri) {
    return x.vertex ? vertex_code(new_corner(tri, x.label)) : nt.locate(x.side).pos;
  };
  auto route = [&](const Tok& x, const Tok& y, std::vector<Segment>& out) {
    auto tx = tris_of(x), ty = tris_of(y);
    for (int tr : tx)
      if (std::find(ty.begin(), ty.end(), tr) != ty.end()) {
        out.push_back({tr, code_in(x, tr), code_in(y, tr)});
        return;
      }
    int a = tx.front(), b = ty.front();
    out.push_back({a, code_in(x, a), 0});
    out.push_back({b, 0, code_in(y, b)});
  };
  auto in_quad = [&](int tri) { return tri == q.t1 || tri == q.t2; };
  auto is_kappa = [&](int tri, int code) { return !is_vertex_code(code) && t.side_at(tri, code).edge == e; };

  Curve r;
  r.loop = c.loop;
  if (c.is_edge()) {
    route({true, {}, U2}, {true, {}, U0}, r.segs);
    r = normalize_vertex_ends(r, nt);
    validate_curve(r, nt);
    return r;
  }
  std::vector<Segment> segs = c.segs;
  if (c.loop) {
    auto it = std::find_if(segs.begin(), segs.end(), [&](const Segment& s) { return !is_kappa(s.tri, s.in); });
    if (it == segs.end()) throw invalid("loop runs only through the flipped edge");
    std::rotate(segs.begin(), it, segs.end());
  }
  for (std::size_t j = 0; j < segs.size(); ++j) {
    const Segment& s = segs[j];
    if (!in_quad(s.tri)) {
      r.segs.push_back(s);
      continue;
    }
    Tok x = token(s.tri, s.in);
    Tok y = token(s.tri, s.out);
    if (is_kappa(s.tri, s.out)) {
      if (j + 1 >= segs.size()) throw invalid("curve ends on the flipped edge");
      const Segment& s2 = segs[++j];
      y = token(s2.tri, s2.out);
    }
    route(x, y, r.segs);
  }
  r = normalize_vertex_ends(r, nt);
  validate_curve(r, nt);
  return r;
}

Materialized materialize(const Curve& c, const Triangulation& t, const std::map<int, int>& sigma, int turns) {
  Materialized m;
  m.loop = c.loop;
  if (c.loop) {
    m.segs = c.segs;
    return m;
  }
  auto sign_at = [&](int point) {
    auto it = sigma.find(point);
    if (it == sigma.end() || (it->second != 1 && it->second != -1))
      throw invalid("missing spiral sign at puncture " + std::to_string(point));
    return it->second;
  };
  // Exit side when leaving the corner at a puncture for a spiral of sign s.
  auto spiral_exit = [](int corner, int s) { return s > 0 ? mod3(corner + 1) : corner; };
  auto extend = [&](std::vector<Segment>& segs, int point, int s) {
    const Segment& last = segs.back();
    Side x = t.side_at(last.tri, last.out);
    SideLocation l = t.locate(x.twin());
    Corner cn{l.tri, s > 0 ? l.pos : mod3(l.pos + 2)};
    int n = turns * degree_from(t, cn);
    for (int k = 0; k < n; ++k) {
      if (t.corner_point(cn.tri, cn.pos) != point) throw invalid("spiral left its puncture");
      if (s > 0) {
        segs.push_back({cn.tri, cn.pos, mod3(cn.pos + 1)});
        cn = t.rotate_cw(cn);
      } else {
        segs.push_back({cn.tri, mod3(cn.pos + 1), cn.pos});
        cn = t.rotate_ccw(cn);
      }
    }
  };
  auto is_punct = [&](int point) { return t.surface.is_puncture(point); };

  if (c.is_edge()) {
    const EdgeInfo& ed = t.edges[c.along_edge];
    if (!is_punct(ed.mplus) || !is_punct(ed.mminus)) throw invalid("edge curve must join punctures");
    int sp = sign_at(ed.mplus), sq = sign_at(ed.mminus);
    SideLocation l = t.locate({c.along_edge, 0});
    int head = spiral_exit(mod3(l.pos - 1), sp), tail = spiral_exit(l.pos, sq);
    Segment mid{l.tri, head, tail};
    if (head == tail) {
      l = t.locate({c.along_edge, 1});
      head = spiral_exit(l.pos, sp);
      tail = spiral_exit(mod3(l.pos - 1), sq);
      mid = {l.tri, head, tail};
    }
    std::vector<Segment> segs = {mid};
    extend(segs, ed.mminus, sq);
    // The head spiral is the tail spiral of the reversed chain.
    std::vector<Segment> rev = segs;
    std::reverse(rev.begin(), rev.end());
    for (auto& s : rev) std::swap(s.in, s.out);
    extend(rev, ed.mplus, sp);
    std::reverse(rev.begin(), rev.end());
    for (auto& s : rev) std::swap(s.in, s.out);
    m.segs = rev;
    m.start_open = m.end_open = true;
    return m;
  }
  std::vector<Segment> segs = c.segs;
  auto open_end = [&](std::vector<Segment>& v, bool& flag) {
    Segment& l = v.back();
    if (!is_vertex_code(l.out)) return;
    int cv = code_corner(l.out);
    int point = t.corner_point(l.tri, cv);
    if (!is_punct(point)) throw invalid("lamination arcs end on the boundary or at punctures");
    int s = sign_at(point);
    l.out = spiral_exit(cv, s);
    extend(v, point, s);
    flag = true;
  };
  open_end(segs, m.end_open);
  std::reverse(segs.begin(), segs.end());
  for (auto& s : segs) std::swap(s.in, s.out);
  open_end(segs, m.start_open);
  std::reverse(segs.begin(), segs.end());
  for (auto& s : segs) std::swap(s.in, s.out);
  m.segs = std::move(segs);
  return m;
}

Unspiraled unspiral(const Materialized& m, const Triangulation& t) {
  Unspiraled u;
  const auto& segs = m.segs;
  if (segs.empty()) throw invalid("empty chain");
  if (m.loop) {
    u.curve = Curve{true, segs, -1};
    u.junk = is_peripheral(u.curve, t);
    return u;
  }
  const int n = static_cast<int>(segs.size());
  auto turn = [&](int j) { return segment_turn(segs[j]); };
  int h = 0, j = n - 1;
  auto point_of = [&](int k) { return t.corner_point(segs[k].tri, segment_corner(segs[k])); };
  if (m.start_open) {
    u.start_point = point_of(0);
    char d = turn(0);
    while (h < n && turn(h) == d) ++h;
    u.start_sign = d == 'L' ? 1 : -1;
  }
  if (m.end_open) {
    u.end_point = point_of(n - 1);
    char d = turn(n - 1);
    while (j >= 0 && turn(j) == d) --j;
    u.end_sign = d == 'R' ? 1 : -1;
  }
  if (m.start_open && m.end_open) {
    if (h > j + 1) {
      u.junk = true;
      return u;
    }
    if (h == j + 1) {
      u.curve = Curve{false, {}, t.side_at(segs[j].tri, segs[j].out).edge};
      return u;
    }
  } else if (m.end_open && j < 0) {
    u.junk = true;
    return u;
  } else if (m.start_open && h >= n) {
    u.junk = true;
    return u;
  }
  // The segments next to the spirals turn the other way; they are kept
  // and re-aimed at the vertex opposite the side they come from.
  int lo = m.start_open ? h : 0;
  int hi = m.end_open ? j : n - 1;
  std::vector<Segment> kept(segs.begin() + lo, segs.begin() + hi + 1);
  if (m.start_open) kept.front().in = vertex_code(opposite_corner(segs[lo].out));
  if (m.end_open) kept.back().out = vertex_code(opposite_corner(segs[hi].in));
  Curve c{false, kept, -1};
  u.curve = normalize_vertex_ends(c, t);
  return u;
}

std::vector<std::pair<Curve, int>> trace_normal(const std::vector<int>& counts, const Triangulation& t) {
  if (static_cast<int>(counts.size()) != t.num_edges()) throw invalid("crossing count vector has the wrong length");
  for (int x : counts)
    if (x < 0) throw invalid("negative crossing count");
  const int nt = t.num_triangles();
  std::vector<std::array<int, 3>> corner(nt);
  auto nside = [&](int tri, int pos) { return counts[t.side_at(tri, pos).edge]; };
  for (int i = 0; i < nt; ++i)
    for (int k = 0; k < 3; ++k) {
      int v = nside(i, k) + nside(i, k + 1) - nside(i, k + 2);
      if (v < 0 || v % 2 != 0) throw invalid("crossing counts violate the triangle inequalities");
      corner[i][k] = v / 2;
    }
  // Crossing points of side (e,k) are indexed from the start of that side.
  std::vector<std::vector<char>> used(t.num_edges());
  for (int e = 0; e < t.num_edges(); ++e) used[e].assign(counts[e], 0);
  auto mark = [&](Side s, int idx) {
    int i0 = s.k == 0 ? idx : counts[s.edge] - 1 - idx;
    bool was = used[s.edge][i0];
    used[s.edge][i0] = 1;
    return was;
  };
  // Follows a strand entering triangle `tri` through side `pos` at index `idx`.
  auto step = [&](int tri, int pos, int idx, int& opos, int& oidx) {
    int cprev = corner[tri][mod3(pos - 1)];
    if (idx < cprev) {
      opos = mod3(pos - 1);
      oidx = nside(tri, opos) - 1 - idx;
    } else {
      opos = mod3(pos + 1);
      oidx = nside(tri, pos) - 1 - idx;
    }
  };
  std::vector<Curve> comps;
  auto trace = [&](int tri, int pos, int idx, bool loop) {
    Curve c;
    c.loop = loop;
    int guard = 0;
    int total = 0;
    for (int x : counts) total += x;
    while (true) {
      if (++guard > total + 2) throw invalid("strand does not close");
      int opos, oidx;
      step(tri, pos, idx, opos, oidx);
      c.segs.push_back({tri, pos, opos});
      Side s = t.side_at(tri, opos);
      if (t.is_boundary(s.edge)) {
        mark(s, oidx);
        break;
      }
      SideLocation l = t.locate(s.twin());
      int nidx = counts[s.edge] - 1 - oidx;
      if (mark(s, oidx)) break;
      tri = l.tri;
      pos = l.pos;
      idx = nidx;
    }
    comps.push_back(c);
  };
  for (int e : t.boundary_edges()) {
    SideLocation l = t.locate({e, 0});
    for (int i = 0; i < counts[e]; ++i) {
      if (used[e][i]) continue;
      used[e][i] = 1;
      trace(l.tri, l.pos, i, false);
    }
  }
  for (int e : t.interior_edges()) {
    SideLocation l = t.locate({e, 1});
    for (int i = 0; i < counts[e]; ++i) {
      if (used[e][i]) continue;
      used[e][i] = 1;
      // Enter the triangle holding side 1; its index runs the other way.
      trace(l.tri, l.pos, counts[e] - 1 - i, true);
    }
  }
  std::map<std::vector<int>, std::pair<Curve, int>> merged;
  std::vector<std::vector<int>> order;
  for (auto& c : comps) {
    auto key = canonical_key(c);
    auto it = merged.find(key);
    if (it == merged.end()) {
      merged.emplace(key, std::make_pair(c, 1));
      order.push_back(key);
    } else {
      it->second.second++;
    }
  }
  std::vector<std::pair<Curve, int>> out;
  for (const auto& k : order) out.push_back(merged[k]);
  return out;
}

FlipPath flip_path_to_arc(const Curve& arc, const Triangulation& t) {
  FlipPath p;
  p.tri = t;
  Curve cur = arc;
  for (int guard = 0; !cur.is_edge(); ++guard) {
    if (guard > 20 * t.num_edges() + 20) throw invalid("flip path search does not terminate");
    bool done = false;
    for (const auto& s : cur.segs) {
      if (is_vertex_code(s.out)) continue;
      int e = p.tri.side_at(s.tri, s.out).edge;
      int id = p.tri.edges[e].id;
      FlipResult f;
      try {
        f = flip(p.tri, id);
      } catch (const Error& err) {
        if (err.kind() == ErrorKind::WouldSelfFold) continue;
        throw;
      }
      cur = renormalize(cur, p.tri, f, e);
      p.tri = std::move(f.tri);
      p.flips.push_back(id);
      done = true;
      break;
    }
    if (!done) throw invalid("no admissible flip along the arc");
  }
  p.edge = cur.along_edge;
  return p;
}

Rational intersection_number(int edge, const Curve& c, const Triangulation& t) {
  return Rational(crossing_counts(c, t)[edge]) / 2;
}

Rational intersection_number(const Curve& arc, const Curve& c, const Triangulation& t) {
  FlipPath p = flip_path_to_arc(arc, t);
  Triangulation cur = t;
  Curve x = c;
  for (int id : p.flips) {
    FlipResult f = flip(cur, id);
    x = renormalize(x, cur, f, cur.index_of(id));
    cur = std::move(f.tri);
  }
  return intersection_number(p.edge, x, cur);
}

}  // namespace surfcluster

namespace surfcluster {

std::vector<Curve> enumerate_curves(const Triangulation& t, int max_crossings) {
  std::vector<Curve> out;
  std::set<std::vector<int>> seen;
  auto keep = [&](const Curve& c) {
    try {
      validate_curve(c, t);
    } catch (const Error&) {
      return;
    }
    if (seen.insert(canonical_key(c)).second) out.push_back(c);
  };
  // Depth-first over turn sequences; `crossed` counts interior sides passed.
  std::function<void(Curve&, int)> extend = [&](Curve& c, int crossed) {
    const Segment last = c.segs.back();
    Side s = t.side_at(last.tri, last.out);
    if (t.is_boundary(s.edge)) {
      if (!c.loop) keep(c);
      return;
    }
    SideLocation next = t.locate(s.twin());
    if (c.loop && next.tri == c.segs.front().tri && next.pos == c.segs.front().in) {
      keep(c);
      return;
    }
    if (crossed == max_crossings) return;
    for (int d : {1, 2}) {
      c.segs.push_back({next.tri, next.pos, (next.pos + d) % 3});
      extend(c, crossed + 1);
      c.segs.pop_back();
    }
  };
  for (int e : t.boundary_edges()) {
    SideLocation l = t.locate({e, 0});
    for (int d : {1, 2}) {
      Curve c;
      c.segs.push_back({l.tri, l.pos, (l.pos + d) % 3});
      extend(c, 0);
    }
  }
  for (int e : t.interior_edges())
    for (int k : {0, 1}) {
      SideLocation l = t.locate({e, k});
      for (int d : {1, 2}) {
        Curve c;
        c.loop = true;
        c.segs.push_back({l.tri, l.pos, (l.pos + d) % 3});
        extend(c, 1);
      }
    }
  return out;
}

}  // namespace surfcluster
