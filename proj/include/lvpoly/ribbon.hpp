#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "lvpoly/edge_set.hpp"
#include "lvpoly/multigraph.hpp"

namespace lvpoly {

/// One end of an edge. End 0 sits at ends(edge).u, end 1 at ends(edge).v.
struct HalfEdge {
  int edge = 0;
  int end = 0;

  int code() const { return 2 * edge + end; }
  static HalfEdge from_code(int code) { return {code >> 1, code & 1}; }
  friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

/// Cyclic sequence of half-edges around one disc of a vertex.
using Sector = std::vector<HalfEdge>;

/// Signed rotation system. A vertex carries one or more sectors; a vertex with
/// several sectors is a pinch point where that many discs meet.
///
/// Corner convention used throughout: the half-edge h occupies a segment of its
/// sector's disc boundary running from corner (h,0) to corner (h,1) in rotation
/// order. Side s of edge e is the long side of its band that starts at corner
/// ((e,0), s); it ends at ((e,1), 1-s) when sign(e) = +1 and at ((e,1), s) when
/// the band is half-twisted.
class RotationSystem {
 public:
  struct SectorRef {
    int vertex;
    int index;  // position within that vertex's sector list
  };

  RotationSystem(Multigraph graph, std::map<int, std::vector<Sector>> sectors,
                 std::map<int, int> signs = {});

  /// Ordinary ribbon graph: exactly one sector per vertex. Unlisted vertices
  /// get an empty rotation; unlisted edges get sign +1.
  static RotationSystem ribbon(Multigraph graph, std::map<int, Sector> rotation,
                               std::map<int, int> signs = {});

  const Multigraph& graph() const { return graph_; }
  EdgeSet edges() const { return graph_.edges(); }
  const std::vector<Sector>& sectors(int v) const;
  int sign(int e) const;
  bool has_pinch() const { return num_sectors() != graph_.num_vertices(); }

  int num_sectors() const { return static_cast<int>(sector_refs_.size()); }
  const SectorRef& sector_ref(int s) const { return sector_refs_[s]; }
  /// Half-edge codes of global sector s in rotation order.
  const std::vector<int>& sector_codes(int s) const { return flat_[s]; }
  int sector_of(HalfEdge h) const { return sector_of_code_[h.code()]; }

 private:
  Multigraph graph_;
  std::map<int, std::vector<Sector>> sectors_;
  std::array<int, 64> signs_{};
  std::vector<SectorRef> sector_refs_;
  std::vector<std::vector<int>> flat_;
  std::array<int, 128> sector_of_code_{};
};

struct SideVisit {
  int edge;
  int side;
  bool forward;  // traversed from the end-0 corner towards the end-1 corner
  friend bool operator==(const SideVisit&, const SideVisit&) = default;
};

struct BoundaryCircle {
  std::vector<SideVisit> sides;  // traversal order
  std::vector<int> sectors;      // global sector of each vertex arc passed
};

struct BoundaryTrace {
  std::vector<BoundaryCircle> circles;
  std::array<int, 128> side_circle{};    // 2*edge + side -> circle, -1 if absent
  std::array<int, 256> corner_circle{};  // 2*halfedge_code + k -> circle, -1 if absent

  int count() const { return static_cast<int>(circles.size()); }
  int circle_of_side(int e, int side) const { return side_circle[2 * e + side]; }
  int circle_of_corner(HalfEdge h, int k) const { return corner_circle[2 * h.code() + k]; }
};

/// Boundary circles of the spanning ribbon subgraph (V, A), each sector
/// treated as its own disc. Circles carrying sides are numbered by their
/// smallest (edge, side); circles of sectors with no edge of A follow, ordered
/// by sector.
BoundaryTrace trace_boundary(const RotationSystem& r, EdgeSet a);

/// f(A), without building the trace.
int face_count(const RotationSystem& r, EdgeSet a);

/// Components of the ribbon surface of (V, A) with sectors as separate discs.
/// Equals c(A) when there are no pinch vertices.
int surface_components(const RotationSystem& r, EdgeSet a);

/// gamma(A) = 2k - f - chi of the ribbon surface of (V, A).
int euler_genus(const RotationSystem& r, EdgeSet a);
inline int euler_genus(const RotationSystem& r) { return euler_genus(r, r.edges()); }

bool is_orientable(const RotationSystem& r, EdgeSet a);
inline bool is_orientable(const RotationSystem& r) { return is_orientable(r, r.edges()); }

/// Geometric dual. Vertex i of the result is boundary circle i of the full
/// edge set; dual half-edge (e, s) sits where side s of e was traced.
RotationSystem dual(const RotationSystem& r);

/// Half-twists every edge of c.
RotationSystem twist(const RotationSystem& r, EdgeSet c);

/// Reverses one sector and re-signs the edges with exactly one end in it.
/// Describes the same surface; sides of edges whose end 0 lies in the sector
/// swap labels.
RotationSystem flip_sector(const RotationSystem& r, int vertex, int sector_index);

/// (V, A) is connected with exactly one boundary component.
bool is_quasi_tree(const RotationSystem& r, EdgeSet a);

/// Checkerboard-coloured medial graph. Medial vertex ids equal edge ids of the
/// source graph. The rotation at vertex e starts at the corner ((e,0),0) and
/// the segments after positions 0 and 2 face black faces (vertex discs of the
/// source), the segments after positions 1 and 3 face white faces.
struct Medial {
  RotationSystem graph;
  /// medial edge id -> half-edge code h of the source whose corner (h,1)
  /// starts the vertex arc that the medial edge follows
  std::vector<int> arc_start;
};

Medial medial(const RotationSystem& r);

/// Blackface and whiteface graphs of a medial graph, read off its faces. Edge
/// e of both joins the faces around medial vertex e.
struct TaitGraphs {
  Multigraph black;
  Multigraph white;
};

TaitGraphs tait_graphs(const Medial& m);

}  // namespace lvpoly
