#pragma once

#include <map>
#include <optional>
#include <string>

#include "lvpoly/edge_set.hpp"
#include "lvpoly/polynomial.hpp"
#include "lvpoly/ribbon.hpp"

namespace lvpoly {

enum class Split { white, black, crossing };

/// A vertex state at every vertex of the medial graph, indexed by the edge
/// of G the medial vertex sits on. W, B, C partition E(G).
struct GraphState {
  EdgeSet white;
  EdgeSet black;
  EdgeSet crossing;

  /// White on `white`, crossing on `crossing`, black on the rest of `edges`.
  static GraphState make(EdgeSet edges, EdgeSet white, EdgeSet crossing = {});

  EdgeSet edges() const { return white | black | crossing; }
  Split at(int e) const;
  bool crossing_free() const { return crossing.empty(); }
  /// One letter per edge in id order: w, b or c.
  std::string to_string() const;
  friend bool operator==(const GraphState&, const GraphState&) = default;
};

/// Calls f for all 3^|E| states, in a fixed order.
template <class F>
void for_each_state(EdgeSet edges, F&& f) {
  const std::vector<int> ids = edges.ids();
  std::vector<int> digit(ids.size(), 0);
  while (true) {
    GraphState s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (digit[i] == 0) s.white = s.white.with(ids[i]);
      if (digit[i] == 1) s.black = s.black.with(ids[i]);
      if (digit[i] == 2) s.crossing = s.crossing.with(ids[i]);
    }
    f(s);
    std::size_t i = 0;
    while (i < ids.size() && digit[i] == 2) digit[i++] = 0;
    if (i == ids.size()) return;
    ++digit[i];
  }
}

/// Calls f for the 2^|E| crossing-free states, white set = each subset.
template <class F>
void for_each_noncrossing_state(EdgeSet edges, F&& f) {
  for_each_subset(edges, [&](EdgeSet w) { f(GraphState{w, edges - w, EdgeSet{}}); });
}

/// Components of state s of the medial graph of G = F_bl, read off G as
/// f(G^{tau(C)} - B). G must be a connected ribbon graph.
int state_components(const RotationSystem& g, const GraphState& s);

/// Same count by smoothing the medial graph at every vertex and counting
/// closed curves. Independent of the ribbon-graph route.
int traced_state_components(const Medial& m, const GraphState& s);

/// k -> number of crossing-free states with k components.
std::map<int, long long> noncrossing_profile(const RotationSystem& g, int cap = 20);
/// sum_k f_k t^k
Laurent profile_polynomial(const std::map<int, long long>& profile);
/// t R_G(t+1, t, 1/t)
Laurent noncrossing_generating_function(const RotationSystem& g, int cap = 20);

struct ComponentFormula {
  int true_count = 0;   // state_components
  int our_formula = 0;  // 2c(W) - gamma(W) + |W| - v of F_bl
  int min_form = 0;     // min(f(W) + gamma_wh(B), f(W) + gamma_bl(W))
  int rank_form = 0;    // the same minimum written with ranks of F_wh and F_bl
  bool agrees = false;  // min_form == true_count
};

/// Crossing-free states only; F_bl = g, F_wh = dual(g).
ComponentFormula lv_component_formula(const RotationSystem& g, const GraphState& s);
/// Same, with the dual already built.
ComponentFormula lv_component_formula(const RotationSystem& g, const RotationSystem& g_dual, const GraphState& s);

/// First crossing-free state where the minimum formula misses the true count.
std::optional<GraphState> min_formula_counterexample(const RotationSystem& g, int cap = 20);

enum class SurfaceType { sphere, projective_plane, torus, klein_bottle, other };

const char* to_string(SurfaceType s);

/// Closed surface of a connected ribbon graph, as far as the low-genus
/// statements need it.
SurfaceType surface_type(const RotationSystem& g);

struct QuasiTreeReport {
  bool primal_quasi_tree = false;  // G - A
  bool dual_quasi_tree = false;    // G* - A^c
  bool genus_identity = true;      // gamma_G(A^c) + gamma_G*(A) = gamma(G), when G - A is a quasi-tree
  /// On the sphere, torus and projective plane: G - A is a quasi-tree iff
  /// G - A or G* - A^c is a spanning tree. Empty elsewhere.
  std::optional<bool> tree_dichotomy;

  bool ok() const {
    return primal_quasi_tree == dual_quasi_tree && genus_identity && tree_dichotomy.value_or(true);
  }
};

QuasiTreeReport quasi_tree_duality(const RotationSystem& g, EdgeSet a);
QuasiTreeReport quasi_tree_duality(const RotationSystem& g, const RotationSystem& g_dual, EdgeSet a);

struct LrRelation {
  SurfaceType surface = SurfaceType::sphere;
  Laurent lhs;  // L side
  Laurent rhs;  // R_G(t+1, t, 1/t)
  bool holds() const { return lhs == rhs; }
};

/// Sphere and projective plane: L_G(t+1, t+1, 1) against R_G(t+1, t, 1/t).
/// Torus: L_2 + t L_1 + L_0 at (t+1, t+1), L_i the z^i coefficient.
/// Throws DomainError on any other surface.
LrRelation lr_relation(const RotationSystem& g, int cap = 20);

}  // namespace lvpoly
