#pragma once

#include <vector>

#include "lvpoly/multigraph.hpp"
#include "lvpoly/ribbon.hpp"

namespace lvpoly {

/// A connected surface with boundary glued into some boundary circles of the
/// ribbon surface. `circles` index the canonical full-edge-set trace.
struct Region {
  int id = 0;
  int genus = 0;  // Euler genus
  std::vector<int> circles;
};

/// Graph in a pseudo-surface: the ribbon neighbourhood of the graph (pinch
/// points as multi-sector vertices) plus the regions filling its boundary.
class EmbeddedGraph {
 public:
  EmbeddedGraph(RotationSystem rotation, std::vector<Region> regions);

  /// One genus-0 region per boundary circle, region id = circle index.
  static EmbeddedGraph cellular(RotationSystem rotation);

  const RotationSystem& rotation() const { return rotation_; }
  const Multigraph& graph() const { return rotation_.graph(); }
  EdgeSet edges() const { return rotation_.edges(); }
  const BoundaryTrace& circles() const { return trace_; }
  const std::vector<Region>& regions() const { return regions_; }
  /// Abstract graph on region ids, one edge per edge of the graph.
  const Multigraph& dagger() const { return dagger_; }

  int region_of_circle(int circle) const { return region_of_circle_[circle]; }
  int region_of_side(int e, int side) const { return region_of_circle(trace_.circle_of_side(e, side)); }
  const Region& region(int id) const;

 private:
  RotationSystem rotation_;
  BoundaryTrace trace_;
  std::vector<Region> regions_;  // sorted by id
  std::vector<int> region_of_circle_;
  Multigraph dagger_;
};

struct SurfaceReport {
  int components = 0;           // k(Sigma)
  int euler_characteristic = 0; // chi(Sigma)
  int euler_genus = 0;          // 2k - chi; may be negative with pinch points
  bool cellular = false;
};

SurfaceReport validate(const EmbeddedGraph& emb);

/// The pair (G, G-dagger) on a shared edge-id set. Deletion and contraction
/// act on this pair without any surface data.
struct EmbeddingScheme {
  Multigraph graph;
  Multigraph dagger;

  EmbeddingScheme(Multigraph g, Multigraph d);
  EdgeSet edges() const { return graph.edges(); }
};

EmbeddingScheme derive_dagger(const EmbeddedGraph& emb);

/// rho(A): regions of the spanning subgraph (V, A), i.e. components of the
/// dagger graph on the edges outside A.
int rho(const EmbeddingScheme& scheme, EdgeSet a);
int rho(const EmbeddedGraph& emb, EdgeSet a);

enum class EdgeKind { bridge, quasi_bridge_only, quasi_loop, ordinary };

const char* to_string(EdgeKind kind);

struct EdgeClass {
  bool loop = false;
  bool bridge = false;
  bool quasi_loop = false;
  bool quasi_bridge = false;

  EdgeKind kind() const;
  friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

/// Topological tests: quasi-loop iff rho({e}) > rho(empty); quasi-bridge iff
/// both sides of e lie on one region of the full graph.
EdgeClass classify_edge(const EmbeddedGraph& emb, int e);
/// Same classification read off the scheme: quasi-loop iff e is a bridge of
/// the dagger graph, quasi-bridge iff it is a loop there.
EdgeClass classify_edge(const EmbeddingScheme& scheme, int e);

EmbeddingScheme delete_edge(const EmbeddingScheme& scheme, int e);
EmbeddingScheme contract_edge(const EmbeddingScheme& scheme, int e);

/// G \ e in the same pseudo-surface. Regions touching e merge.
EmbeddedGraph delete_edge(const EmbeddedGraph& emb, int e);
/// G / e in Sigma / e for a non-loop e; throws DomainError for loops.
EmbeddedGraph contract_edge(const EmbeddedGraph& emb, int e);

struct ComplementStats {
  int k_complement = 0;       // k(Sigma \ A)
  int gamma_complement = 0;   // gamma(Sigma \ A)
  int gamma_neighborhood = 0; // gamma(N(V u A))
  int boundary_circles = 0;   // b(Sigma \ A) = f(A)
};

/// Surfaces only (no pinch vertices).
ComplementStats complement_stats(const EmbeddedGraph& emb, EdgeSet a);
/// Same, reusing validate(emb).
ComplementStats complement_stats(const EmbeddedGraph& emb, EdgeSet a, const SurfaceReport& surface);

}  // namespace lvpoly
