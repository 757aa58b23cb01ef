#include "strands.hpp"

#include <algorithm>

#include "surfcluster/error.hpp"

namespace surfcluster::detail {

namespace {

int mod3(int x) { return ((x % 3) + 3) % 3; }

struct Pieces {
  const StrandSystem& sys;
  std::vector<std::array<int, 3>> base;
  int total = 0;

  explicit Pieces(const StrandSystem& s) : sys(s), base(s.count.size()) {
    for (std::size_t i = 0; i < s.count.size(); ++i)
      for (int k = 0; k < 3; ++k) {
        base[i][k] = total;
        total += s.count[i][k];
      }
  }

  struct Ref {
    int tri, corner, depth;
  };

  Ref ref(int p) const {
    for (std::size_t i = 0; i < base.size(); ++i)
      for (int k = 0; k < 3; ++k)
        if (p >= base[i][k] && p < base[i][k] + sys.count[i][k]) return {static_cast<int>(i), k, p - base[i][k]};
    throw Error(ErrorKind::InvalidInput, "strand index out of range");
  }

  int side_total(int tri, int pos) const { return sys.count[tri][mod3(pos - 1)] + sys.count[tri][mod3(pos)]; }

  // End 0 of a corner-k arc lies on side k, end 1 on side k+1.
  std::pair<int, int> end(const Ref& r, int which) const {
    const auto& c = sys.count[r.tri];
    if (which == 0) return {r.corner, c[mod3(r.corner - 1)] + c[r.corner] - 1 - r.depth};
    return {mod3(r.corner + 1), r.depth};
  }

  std::pair<int, int> at(int tri, int pos, int i) const {
    const auto& c = sys.count[tri];
    int before = c[mod3(pos - 1)];
    if (i < before) return {base[tri][mod3(pos - 1)] + i, 1};
    return {base[tri][mod3(pos)] + c[mod3(pos)] - 1 - (i - before), 0};
  }
};

enum class Stop { Boundary, Dangling, Closed };

}  // namespace

std::vector<Materialized> trace_strands(const StrandSystem& sys) {
  const Triangulation& t = sys.t;
  Pieces pc(sys);
  std::vector<Pieces::Ref> refs;
  refs.reserve(pc.total);
  for (int p = 0; p < pc.total; ++p) refs.push_back(pc.ref(p));
  std::vector<char> used(pc.total, 0);

  auto across = [&](int p, int which, Stop& why) -> std::optional<std::pair<int, int>> {
    const auto& r = refs[p];
    auto [pos, i] = pc.end(r, which);
    Side s = t.side_at(r.tri, pos);
    if (t.is_boundary(s.edge)) {
      why = Stop::Boundary;
      return std::nullopt;
    }
    SideLocation l = t.locate(s.twin());
    int j = sys.span[s.edge] - 1 - i;
    if (j < 0 || j >= pc.side_total(l.tri, l.pos)) {
      why = Stop::Dangling;
      return std::nullopt;
    }
    return pc.at(l.tri, l.pos, j);
  };

  auto walk = [&](int p, int in_end, Stop& why) {
    std::vector<Segment> segs;
    const int start = p;
    while (true) {
      used[p] = 1;
      const auto& r = refs[p];
      segs.push_back({r.tri, pc.end(r, in_end).first, pc.end(r, 1 - in_end).first});
      auto nx = across(p, 1 - in_end, why);
      if (!nx) break;
      if (nx->first == start) {
        why = Stop::Closed;
        break;
      }
      p = nx->first;
      in_end = nx->second;
    }
    return segs;
  };

  std::vector<Materialized> chains;
  for (int p = 0; p < pc.total; ++p) {
    if (used[p]) continue;
    Stop fwd_stop = Stop::Boundary, back_stop = Stop::Boundary;
    auto fwd = walk(p, 0, fwd_stop);
    Materialized m;
    if (fwd_stop == Stop::Closed) {
      m.loop = true;
      m.segs = std::move(fwd);
    } else {
      auto back = walk(p, 1, back_stop);
      std::reverse(back.begin(), back.end());
      for (auto& s : back) std::swap(s.in, s.out);
      back.pop_back();
      back.insert(back.end(), fwd.begin(), fwd.end());
      m.segs = std::move(back);
      m.start_open = back_stop == Stop::Dangling;
      m.end_open = fwd_stop == Stop::Dangling;
    }
    chains.push_back(std::move(m));
  }
  return chains;
}

namespace {

// Whether an open end turns at least a full circle about its point.
bool full_turn(const std::vector<Segment>& segs, bool at_end, const Triangulation& t) {
  if (segs.empty()) return false;
  const Segment& s = at_end ? segs.back() : segs.front();
  char d = segment_turn(s);
  int point = t.corner_point(s.tri, segment_corner(s));
  int degree = 0;
  for (int i = 0; i < t.num_triangles(); ++i)
    for (int k = 0; k < 3; ++k) degree += t.corner_point(i, k) == point;
  int run = 0;
  const int n = static_cast<int>(segs.size());
  for (int j = 0; j < n; ++j) {
    const Segment& x = at_end ? segs[n - 1 - j] : segs[j];
    if (segment_turn(x) != d) break;
    ++run;
  }
  return run >= degree + 1;
}

}  // namespace

std::optional<PLamination> collect_chains(const std::vector<Materialized>& chains, const Triangulation& t) {
  PLamination lam;
  std::vector<WeightedCurve> comps;
  for (const auto& m : chains) {
    if (!m.start_open && !m.end_open) {
      Curve c{m.loop, m.segs, -1};
      if (is_peripheral(c, t)) continue;
      comps.push_back({c, 1});
      continue;
    }
    Unspiraled u = unspiral(m, t);
    if (u.junk) continue;
    if ((m.start_open && !full_turn(m.segs, false, t)) || (m.end_open && !full_turn(m.segs, true, t)))
      return std::nullopt;
    auto record = [&](int point, int sign) {
      if (!t.surface.is_puncture(point)) return false;
      auto [it, fresh] = lam.sigma.emplace(point, sign);
      if (!fresh && it->second != sign)
        throw Error(ErrorKind::InvalidInput, "inconsistent spiral directions at puncture " + std::to_string(point));
      return true;
    };
    if (m.start_open && !record(u.start_point, u.start_sign)) return std::nullopt;
    if (m.end_open && !record(u.end_point, u.end_sign)) return std::nullopt;
    comps.push_back({u.curve, 1});
  }
  lam.components = merge_components(comps);
  for (const auto& c : t.surface.components)
    for (int p : c.punctures) lam.sigma.emplace(p, 0);
  return lam;
}

}  // namespace surfcluster::detail
