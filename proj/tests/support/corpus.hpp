#pragma once

#include <array>
#include <string>
#include <vector>

#include "lvpoly/embedding.hpp"

namespace lvpoly::testing {

struct CorpusEntry {
  std::string name;
  EmbeddedGraph emb;
  SurfaceReport surface;
  bool pinch = false;
  bool orientable = true;
};

/// Hand-built named embeddings: theta on the torus and the plane, the torus
/// loop, the plane digon and the twisted loop.
std::vector<CorpusEntry> named_examples();

/// Deterministic mix of connected embedded graphs with at most 10 edges:
/// cellular embeddings of Euler genus 0 to 3 (both orientabilities),
/// non-cellular surface embeddings, and pinched pseudo-surfaces. Includes
/// named_examples().
const std::vector<CorpusEntry>& corpus();

/// Shorthand for small test graphs: edges as (id, u, v), vertices implied.
Multigraph make_graph(const std::vector<std::array<int, 3>>& edges, int extra_vertices = 0);

}  // namespace lvpoly::testing
