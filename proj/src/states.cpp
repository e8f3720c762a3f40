#include "lvpoly/states.hpp"

#include <algorithm>

#include "lvpoly/disjoint_sets.hpp"
#include "lvpoly/errors.hpp"
#include "lvpoly/invariants.hpp"

namespace lvpoly {

namespace {

void require_connected_ribbon(const RotationSystem& g, const char* what) {
  if (g.has_pinch()) throw DomainError(std::string(what) + ": pinch vertex present");
  if (components(g.graph(), g.edges()) != 1) throw DomainError(std::string(what) + ": graph is not connected");
}

void check_cap(const char* what, int size, int cap) {
  if (size > cap) throw CapExceeded(what, size, cap);
}

bool is_spanning_tree(const Multigraph& g, EdgeSet a) {
  return a.size() == g.num_vertices() - 1 && components(g, a) == 1;
}

std::array<std::optional<Laurent>, kNumVars> substitution(Laurent x, Laurent y, Laurent z) {
  std::array<std::optional<Laurent>, kNumVars> subs;
  subs[static_cast<int>(Var::x)] = std::move(x);
  subs[static_cast<int>(Var::y)] = std::move(y);
  subs[static_cast<int>(Var::z)] = std::move(z);
  return subs;
}

Laurent br_at_t(const RotationSystem& g, int cap) {
  const Laurent t = Laurent::t_power(1);
  return specialize(bollobas_riordan(g, cap), substitution(t + Laurent(1), t, Laurent::t_power(-1)));
}

}  // namespace

GraphState GraphState::make(EdgeSet edges, EdgeSet white, EdgeSet crossing) {
  if (!white.is_subset_of(edges) || !crossing.is_subset_of(edges) || !(white & crossing).empty()) {
    throw InputError("state sets must be disjoint subsets of " + edges.to_string());
  }
  return GraphState{white, edges - white - crossing, crossing};
}

Split GraphState::at(int e) const {
  if (white.contains(e)) return Split::white;
  if (black.contains(e)) return Split::black;
  if (crossing.contains(e)) return Split::crossing;
  throw InputError("state has no vertex " + std::to_string(e));
}

std::string GraphState::to_string() const {
  std::string out;
  for (int e : edges()) {
    const Split s = at(e);
    out += s == Split::white ? 'w' : s == Split::black ? 'b' : 'c';
  }
  return out;
}

int state_components(const RotationSystem& g, const GraphState& s) {
  if (s.edges() != g.edges()) throw InputError("state does not cover the edges of the graph");
  if (g.has_pinch()) throw DomainError("state_components: pinch vertex present");
  return face_count(twist(g, s.crossing), g.edges() - s.black);
}

int traced_state_components(const Medial& m, const GraphState& s) {
  const RotationSystem& f = m.graph;
  if (s.edges() != EdgeSet::from_ids(f.graph().vertices())) {
    throw InputError("state does not cover the medial vertices");
  }
  // Union-find on medial half-edge codes: each medial edge joins its two
  // ends, each vertex joins the pairs its split prescribes.
  DisjointSets sets(128);
  std::array<bool, 128> used{};
  for (int e : f.edges()) {
    sets.unite(2 * e, 2 * e + 1);
    used[2 * e] = used[2 * e + 1] = true;
  }
  for (int v : f.graph().vertices()) {
    const Sector& x = f.sectors(v).front();
    auto join = [&](int i, int j) { sets.unite(x[i].code(), x[j].code()); };
    switch (s.at(v)) {
      case Split::white:
        join(1, 2);
        join(3, 0);
        break;
      case Split::black:
        join(0, 1);
        join(2, 3);
        break;
      case Split::crossing:
        join(0, 2);
        join(1, 3);
        break;
    }
  }
  int curves = 0;
  for (int code = 0; code < 128; ++code) curves += used[code] && sets.find(code) == code;
  // A vertex of G with no edges is a free loop of the medial graph.
  if (f.graph().num_vertices() == 0) curves = 1;
  return curves;
}

std::map<int, long long> noncrossing_profile(const RotationSystem& g, int cap) {
  require_connected_ribbon(g, "noncrossing_profile");
  check_cap("noncrossing state enumeration", g.edges().size(), cap);
  std::map<int, long long> profile;
  for_each_noncrossing_state(g.edges(), [&](const GraphState& s) { ++profile[state_components(g, s)]; });
  return profile;
}

Laurent profile_polynomial(const std::map<int, long long>& profile) {
  Laurent out;
  for (const auto& [k, n] : profile) out.add_term(k, n);
  return out;
}

Laurent noncrossing_generating_function(const RotationSystem& g, int cap) {
  require_connected_ribbon(g, "noncrossing_generating_function");
  return Laurent::t_power(1) * br_at_t(g, cap);
}

ComponentFormula lv_component_formula(const RotationSystem& g, const GraphState& s) {
  return lv_component_formula(g, dual(g), s);
}

ComponentFormula lv_component_formula(const RotationSystem& g, const RotationSystem& g_dual,
                                      const GraphState& s) {
  require_connected_ribbon(g, "lv_component_formula");
  if (!s.crossing_free()) throw DomainError("lv_component_formula: state has crossings");
  const Multigraph& bl = g.graph();
  const Multigraph& wh = g_dual.graph();
  const EdgeSet w = s.white;
  const EdgeSet b = s.black;
  ComponentFormula out;
  out.true_count = state_components(g, s);
  out.our_formula = 2 * components(bl, w) - euler_genus(g, w) + w.size() - bl.num_vertices();
  const int f_w = face_count(g, w);
  out.min_form = std::min(f_w + euler_genus(g_dual, b), f_w + euler_genus(g, w));
  const int medial_vertices = g.edges().size();
  out.rank_form = std::min(b.size() + rank(wh, wh.edges()) - 2 * rank(wh, b) + 1,
                           medial_vertices - b.size() + rank(bl, bl.edges()) - 2 * rank(bl, w) + 1);
  out.agrees = out.min_form == out.true_count;
  return out;
}

std::optional<GraphState> min_formula_counterexample(const RotationSystem& g, int cap) {
  require_connected_ribbon(g, "min_formula_counterexample");
  check_cap("noncrossing state enumeration", g.edges().size(), cap);
  const RotationSystem d = dual(g);
  std::optional<GraphState> found;
  for_each_noncrossing_state(g.edges(), [&](const GraphState& s) {
    if (!found && !lv_component_formula(g, d, s).agrees) found = s;
  });
  return found;
}

const char* to_string(SurfaceType s) {
  switch (s) {
    case SurfaceType::sphere: return "sphere";
    case SurfaceType::projective_plane: return "projective plane";
    case SurfaceType::torus: return "torus";
    case SurfaceType::klein_bottle: return "Klein bottle";
    case SurfaceType::other: return "other";
  }
  return "?";
}

SurfaceType surface_type(const RotationSystem& g) {
  require_connected_ribbon(g, "surface_type");
  switch (euler_genus(g)) {
    case 0: return SurfaceType::sphere;
    case 1: return SurfaceType::projective_plane;
    case 2: return is_orientable(g) ? SurfaceType::torus : SurfaceType::klein_bottle;
    default: return SurfaceType::other;
  }
}

QuasiTreeReport quasi_tree_duality(const RotationSystem& g, EdgeSet a) {
  return quasi_tree_duality(g, dual(g), a);
}

QuasiTreeReport quasi_tree_duality(const RotationSystem& g, const RotationSystem& g_dual, EdgeSet a) {
  require_connected_ribbon(g, "quasi_tree_duality");
  g.graph().check_subset(a);
  const EdgeSet rest = g.edges() - a;
  QuasiTreeReport out;
  out.primal_quasi_tree = is_quasi_tree(g, rest);
  out.dual_quasi_tree = is_quasi_tree(g_dual, a);
  if (out.primal_quasi_tree) {
    out.genus_identity = euler_genus(g, rest) + euler_genus(g_dual, a) == euler_genus(g);
  }
  const SurfaceType type = surface_type(g);
  if (type == SurfaceType::sphere || type == SurfaceType::projective_plane || type == SurfaceType::torus) {
    const bool some_tree = is_spanning_tree(g.graph(), rest) || is_spanning_tree(g_dual.graph(), a);
    out.tree_dichotomy = out.primal_quasi_tree == some_tree;
  }
  return out;
}

LrRelation lr_relation(const RotationSystem& g, int cap) {
  LrRelation out;
  out.surface = surface_type(g);
  const Laurent t = Laurent::t_power(1);
  const Laurent t1 = t + Laurent(1);
  const MPolynomial l = las_vergnas_cellular(g, cap);
  switch (out.surface) {
    case SurfaceType::sphere:
    case SurfaceType::projective_plane:
      out.lhs = specialize(l, substitution(t1, t1, Laurent(1)));
      break;
    case SurfaceType::torus: {
      auto at = [&](int i) { return specialize(l.coefficient(Var::z, i), substitution(t1, t1, Laurent(1))); };
      out.lhs = at(2) + t * at(1) + at(0);
      break;
    }
    default:
      throw DomainError(std::string("lr_relation: needs the sphere, projective plane or torus, got ") +
                        to_string(out.surface));
  }
  out.rhs = br_at_t(g, cap);
  return out;
}

}  // namespace lvpoly
