#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace surfcluster {

struct SurfaceComponent {
  int genus = 0;
  std::vector<int> punctures;
  // Each cycle lists special points in boundary order: interval i runs from
  // point i to point i+1 (cyclically), with the surface on its left.
  std::vector<std::vector<int>> boundary;

  int euler_characteristic() const;  // of the punctured surface
  int num_special() const;
  bool operator==(const SurfaceComponent&) const = default;
};

struct MarkedSurface {
  std::vector<SurfaceComponent> components;

  int num_special() const;
  int num_punctures() const;
  bool is_punctured() const { return num_punctures() > 0; }
  bool is_puncture(int point) const;
  // Expected counts summed over components.
  int expected_edges() const;
  int expected_interior_edges() const;
  int expected_triangles() const;
  bool operator==(const MarkedSurface&) const = default;
};

// Checks (S1)-(S3) on every component; throws ConditionViolated.
void validate_surface(const MarkedSurface& s);

// Connected surface with the given genus, number of punctures and special
// points per boundary component. Special points are numbered first, in
// boundary order, then punctures.
MarkedSurface new_surface(int genus, int punctures, const std::vector<int>& boundary_counts);
MarkedSurface polygon_surface(int n);
// Renumbers the points of b past those of a.
MarkedSurface disjoint_union(const MarkedSurface& a, const MarkedSurface& b);

struct Side {
  int edge = -1;  // edge position in Triangulation::edges
  int k = 0;      // 0 or 1; boundary intervals only have side 0
  Side twin() const { return {edge, 1 - k}; }
  bool operator==(const Side&) const = default;
  auto operator<=>(const Side&) const = default;
};

struct EdgeInfo {
  int id = -1;
  bool boundary = false;
  // Start and end of side 0. For a boundary interval these are m+ and m-.
  int mplus = -1;
  int mminus = -1;
  bool operator==(const EdgeInfo&) const = default;
};

// Sides are listed counterclockwise: side i runs from corner i-1 to
// corner i, and corner i sits between side i and side i+1.
struct Triangle {
  std::array<Side, 3> sides;
  std::array<int, 3> corners;
};

struct SideLocation {
  int tri = -1;
  int pos = -1;
};

// A corner of a triangle: the angle at corners[pos] between sides pos and pos+1.
struct Corner {
  int tri = -1;
  int pos = -1;
  bool operator==(const Corner&) const = default;
};

class Triangulation {
 public:
  MarkedSurface surface;
  std::vector<EdgeInfo> edges;
  std::vector<Triangle> triangles;

  Triangulation() = default;
  Triangulation(MarkedSurface s, std::vector<EdgeInfo> e, std::vector<Triangle> t);

  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_triangles() const { return static_cast<int>(triangles.size()); }
  std::vector<int> ids() const;
  int index_of(int id) const;  // throws UnknownEdge
  bool has_id(int id) const;
  int max_id() const;
  bool is_boundary(int e) const { return edges[e].boundary; }
  std::vector<int> interior_edges() const;
  std::vector<int> boundary_edges() const;

  SideLocation locate(Side s) const { return loc_[s.edge][s.k]; }
  Side side_at(int tri, int pos) const { return triangles[tri].sides[((pos % 3) + 3) % 3]; }
  int corner_point(int tri, int pos) const { return triangles[tri].corners[((pos % 3) + 3) % 3]; }
  // Start/end points of a side in its counterclockwise traversal.
  int side_start(Side s) const;
  int side_end(Side s) const;

  // Rotation about the corner point: clockwise crosses side pos+1,
  // counterclockwise crosses side pos. Returns tri = -1 at the boundary.
  Corner rotate_cw(Corner c) const;
  Corner rotate_ccw(Corner c) const;

  // Boundary interval whose m+ (resp. m-) is the given special point.
  int interval_starting_at(int point) const;
  int interval_ending_at(int point) const;
  // Corners at a special point, from the one on the interval ending there
  // to the one on the interval starting there (clockwise).
  std::vector<Corner> corners_at_special(int point) const;

  // Structural checks: side incidence, self-folding, counts, corner points.
  void validate() const;
  void rebuild_index();

 private:
  std::vector<std::array<SideLocation, 2>> loc_;
};

Triangulation initial_triangulation(const MarkedSurface& s);

// Maps old edge ids to new ones; only the flipped or glued edges move.
using EdgeRelabeling = std::map<int, int>;

struct FlipResult {
  Triangulation tri;
  EdgeRelabeling relabel;
  int new_id = -1;
};

// Flip of the interior edge with the given id. The new diagonal keeps the
// position of the old one and receives a fresh id.
FlipResult flip(const Triangulation& t, int edge_id);

// Flip configuration of an interior edge at position e, in the labels
// (kappa, b, a) / (kappa, d, c) of the two triangles.
struct Quad {
  int t1 = -1, t2 = -1;      // triangles holding side 0 / side 1 of kappa
  int p1 = -1, p2 = -1;      // positions of kappa in them
  Side a, b, c, d;           // t1 = (kappa, b, a), t2 = (kappa, d, c)
};
Quad quad_of(const Triangulation& t, int e);

// True when the two triangulations agree as sets of edge-id triangles
// (after mapping ids of `a` through `relabel`).
bool same_triangulation(const Triangulation& a, const Triangulation& b,
                        const EdgeRelabeling& relabel = {});

// Finds a bijection of edge positions a -> b that fixes boundary interval
// ids and carries triangles to triangles. Empty if none exists.
std::vector<int> match_triangulations(const Triangulation& a, const Triangulation& b);

struct ExchangeData {
  Eigen::MatrixXi epsilon;
  Eigen::MatrixXi m;
  Eigen::MatrixXi p;
};

ExchangeData exchange_data(const Triangulation& t);

struct GlueResult {
  Triangulation tri;
  EdgeRelabeling edge_map;  // old id -> new id; both glued intervals map to alpha_bar
  int alpha_bar = -1;
  std::vector<int> new_punctures;
  std::map<int, int> point_map;  // old marked point -> new marked point
};

GlueResult glue_surface(const Triangulation& t, int left_id, int right_id);

}  // namespace surfcluster
