#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "surfcluster/rational.hpp"
#include "surfcluster/surface.hpp"

namespace surfcluster {

// A piece of a curve inside one triangle. `in` and `out` are side
// positions 0..2, or vertex codes -1-c for an end at corner c.
struct Segment {
  int tri = -1;
  int in = -1;
  int out = -1;
  bool operator==(const Segment&) const = default;
  auto operator<=>(const Segment&) const = default;
};

inline bool is_vertex_code(int x) { return x < 0; }
inline int vertex_code(int corner) { return -1 - corner; }
inline int code_corner(int x) { return -1 - x; }

// Curves are stored relative to a reference triangulation as a chain of
// segments; consecutive segments share a crossed side. Arcs end on
// boundary sides or at vertices (marked points); loops are cyclic. An arc
// isotopic to an edge of the triangulation has no segments and records the
// edge position instead, oriented along side 0.
struct Curve {
  bool loop = false;
  std::vector<Segment> segs;
  int along_edge = -1;

  bool is_edge() const { return along_edge >= 0; }
  bool operator==(const Curve&) const = default;
};

enum class EndKind { Boundary, Vertex };

struct CurveEnd {
  EndKind kind = EndKind::Boundary;
  int edge = -1;   // boundary interval position for Boundary ends
  int point = -1;  // marked point id
};

CurveEnd start_of(const Curve& c, const Triangulation& t);
CurveEnd end_of(const Curve& c, const Triangulation& t);

// Corner at which a side-to-side segment turns.
int segment_corner(const Segment& s);
// 'L' when out = in + 2 (counterclockwise about the corner), 'R' when out = in + 1.
char segment_turn(const Segment& s);

// Checks chain consistency, corner-arc shape and the absence of
// back-tracking through one side. Throws NotMinimalPosition or InvalidInput.
void validate_curve(const Curve& c, const Triangulation& t);

Curve reversed(const Curve& c);
// Boundary-ended arc or loop, no vertex ends.
bool is_boundary_arc(const Curve& c, const Triangulation& t);
bool has_vertex_end(const Curve& c);

// Number of passages through each edge; boundary endpoints count once.
std::vector<int> crossing_counts(const Curve& c, const Triangulation& t);

// Canonical key: equal keys iff the curves agree up to orientation
// (and rotation, for loops).
std::vector<int> canonical_key(const Curve& c);
bool same_curve(const Curve& a, const Curve& b);

// Arc around a single special point, or loop around a single puncture.
bool is_peripheral(const Curve& c, const Triangulation& t);
// Special point (or puncture) the peripheral curve surrounds, -1 otherwise.
int peripheral_point(const Curve& c, const Triangulation& t);

// Moves vertex ends that sit on an endpoint of their side back along the
// curve, collapsing to an edge when nothing remains.
Curve normalize_vertex_ends(Curve c, const Triangulation& t);

// Word serialization: sides passed through in order (side id = 2*edge_id+k).
// Vertex ends contribute nothing; `start_vertex`/`end_vertex` flag them.
struct CurveWord {
  bool loop = false;
  std::vector<int> sides;
  bool start_vertex = false;
  bool end_vertex = false;
  int along_edge_id = -1;
};
CurveWord to_word(const Curve& c, const Triangulation& t);
Curve from_word(const CurveWord& w, const Triangulation& t);

// Ideal arc isotopic to the given edge.
Curve edge_curve(int edge);

// Positive shift of an ideal arc (edge or vertex-ended curve) to the
// boundary. Throws EndpointAtPuncture.
Curve b_shift(const Curve& ideal_arc, const Triangulation& t);
Curve b_shift_edge(int edge, const Triangulation& t);
// Negative shift of a boundary-ended arc to the special points.
Curve m_shift(const Curve& arc, const Triangulation& t);

// Curve rewritten on flip(t, edge) by rerouting inside the quadrilateral.
Curve renormalize(const Curve& c, const Triangulation& t, int edge_id);
// Same for a flip that was already computed.
Curve renormalize(const Curve& c, const Triangulation& t, const FlipResult& f, int edge_pos);

// Segments of a curve with puncture ends replaced by spirals of the given
// number of turns (sign +1 turns clockwise about the puncture).
struct Materialized {
  bool loop = false;
  std::vector<Segment> segs;
  bool start_open = false;  // the chain continues beyond the first segment
  bool end_open = false;
};
Materialized materialize(const Curve& c, const Triangulation& t, const std::map<int, int>& sigma, int turns);

// Rebuilds a curve from a segment chain whose open ends spiral into
// punctures; returns the spiral signs found at the ends.
struct Unspiraled {
  Curve curve;
  int start_sign = 0, end_sign = 0;
  int start_point = -1, end_point = -1;  // marked points the open ends spiral into
  bool junk = false;  // consists only of turns about one marked point
};
Unspiraled unspiral(const Materialized& m, const Triangulation& t);

// Normal multicurve with the given crossing counts, traced into
// components with multiplicities. Throws InvalidInput on inconsistent
// counts.
std::vector<std::pair<Curve, int>> trace_normal(const std::vector<int>& counts, const Triangulation& t);

// Flip sequence (edge ids, in order) after which the ideal arc is an edge.
struct FlipPath {
  std::vector<int> flips;
  Triangulation tri;
  int edge = -1;  // position of the arc in `tri`
};
FlipPath flip_path_to_arc(const Curve& ideal_arc, const Triangulation& t);

// Boundary-ended arcs and loops in minimal position crossing at most
// `max_crossings` interior edges, one per isotopy class and orientation pair.
std::vector<Curve> enumerate_curves(const Triangulation& t, int max_crossings);

// Half the geometric intersection number of an edge with a curve.
Rational intersection_number(int edge, const Curve& c, const Triangulation& t);
// Same for an ideal arc given as a curve.
Rational intersection_number(const Curve& ideal_arc, const Curve& c, const Triangulation& t);

}  // namespace surfcluster
