#pragma once

#include <array>
#include <vector>

#include "lvpoly/edge_set.hpp"

namespace lvpoly {

struct EdgeEnds {
  int u = -1;
  int v = -1;
  bool is_loop() const { return u == v; }
};

/// Finite multigraph with loops and parallel edges. Vertex ids are arbitrary
/// non-negative integers; edge ids are in [0, 63]. Minors keep surviving ids.
class Multigraph {
 public:
  Multigraph() = default;

  void add_vertex(int id);
  void add_edge(int id, int u, int v);

  const std::vector<int>& vertices() const { return vertices_; }
  EdgeSet edges() const { return edges_; }
  EdgeEnds ends(int e) const;

  bool has_vertex(int v) const;
  bool has_edge(int e) const { return edges_.contains(e); }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return edges_.size(); }

  /// Position of `v` in vertices(); throws for unknown ids.
  int vertex_index(int v) const;
  /// Endpoint positions (see vertex_index) of edge e.
  std::pair<int, int> dense_ends(int e) const { return dense_[e]; }

  void check_subset(EdgeSet a) const;

  friend bool operator==(const Multigraph& a, const Multigraph& b);

 private:
  void reindex();

  std::vector<int> vertices_;  // sorted
  EdgeSet edges_;
  std::array<EdgeEnds, 64> ends_{};
  std::array<std::pair<int, int>, 64> dense_{};
};

/// c(A): components of the spanning subgraph (V, A).
int components(const Multigraph& g, EdgeSet a);
/// r(A) = v - c(A)
int rank(const Multigraph& g, EdgeSet a);
/// n(A) = |A| - r(A)
int nullity(const Multigraph& g, EdgeSet a);

bool is_bridge(const Multigraph& g, int e);

Multigraph delete_edge(const Multigraph& g, int e);
/// Removes e and merges its endpoints into the smaller vertex id.
/// Contracting a loop deletes it.
Multigraph contract_edge(const Multigraph& g, int e);

/// True when g and h have the same edge ids and some vertex bijection maps
/// the endpoints of every edge of g onto those of the same edge in h.
bool same_up_to_vertex_relabel(const Multigraph& g, const Multigraph& h);

}  // namespace lvpoly
