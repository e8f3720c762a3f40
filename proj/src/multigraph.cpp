#include "lvpoly/multigraph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "lvpoly/disjoint_sets.hpp"
#include "lvpoly/errors.hpp"

namespace lvpoly {

void Multigraph::add_vertex(int id) {
  if (id < 0) throw InputError("negative vertex id " + std::to_string(id));
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it != vertices_.end() && *it == id) {
    throw InputError("duplicate vertex id " + std::to_string(id));
  }
  vertices_.insert(it, id);
  reindex();
}

void Multigraph::add_edge(int id, int u, int v) {
  if (id < 0 || id > kMaxEdgeId) {
    throw InputError("edge id " + std::to_string(id) + " outside [0, 63]");
  }
  if (edges_.contains(id)) throw InputError("duplicate edge id " + std::to_string(id));
  if (!has_vertex(u) || !has_vertex(v)) {
    throw InputError("edge " + std::to_string(id) + " references unknown vertex");
  }
  edges_ = edges_.with(id);
  ends_[id] = {u, v};
  dense_[id] = {vertex_index(u), vertex_index(v)};
}

EdgeEnds Multigraph::ends(int e) const {
  if (!edges_.contains(e)) throw InputError("unknown edge id " + std::to_string(e));
  return ends_[e];
}

bool Multigraph::has_vertex(int v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int Multigraph::vertex_index(int v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) {
    throw InputError("unknown vertex id " + std::to_string(v));
  }
  return static_cast<int>(it - vertices_.begin());
}

void Multigraph::check_subset(EdgeSet a) const {
  if (!a.is_subset_of(edges_)) {
    throw InputError("edge set " + (a - edges_).to_string() + " not in graph");
  }
}

void Multigraph::reindex() {
  for (int e : edges_) dense_[e] = {vertex_index(ends_[e].u), vertex_index(ends_[e].v)};
}

bool operator==(const Multigraph& a, const Multigraph& b) {
  if (a.vertices_ != b.vertices_ || a.edges_ != b.edges_) return false;
  for (int e : a.edges_) {
    if (a.ends_[e].u != b.ends_[e].u || a.ends_[e].v != b.ends_[e].v) return false;
  }
  return true;
}

int components(const Multigraph& g, EdgeSet a) {
  g.check_subset(a);
  thread_local DisjointSets sets;
  sets.reset(g.num_vertices());
  for (int e : a) {
    auto [u, v] = g.dense_ends(e);
    sets.unite(u, v);
  }
  return sets.count();
}

int rank(const Multigraph& g, EdgeSet a) { return g.num_vertices() - components(g, a); }

int nullity(const Multigraph& g, EdgeSet a) { return a.size() - rank(g, a); }

bool is_bridge(const Multigraph& g, int e) {
  if (!g.has_edge(e)) throw InputError("unknown edge id " + std::to_string(e));
  return components(g, g.edges().without(e)) > components(g, g.edges());
}

Multigraph delete_edge(const Multigraph& g, int e) {
  if (!g.has_edge(e)) throw InputError("unknown edge id " + std::to_string(e));
  Multigraph out;
  for (int v : g.vertices()) out.add_vertex(v);
  for (int f : g.edges().without(e)) out.add_edge(f, g.ends(f).u, g.ends(f).v);
  return out;
}

Multigraph contract_edge(const Multigraph& g, int e) {
  const EdgeEnds ee = g.ends(e);
  if (ee.is_loop()) return delete_edge(g, e);
  const int keep = std::min(ee.u, ee.v);
  const int gone = std::max(ee.u, ee.v);
  auto image = [&](int v) { return v == gone ? keep : v; };
  Multigraph out;
  for (int v : g.vertices()) {
    if (v != gone) out.add_vertex(v);
  }
  for (int f : g.edges().without(e)) out.add_edge(f, image(g.ends(f).u), image(g.ends(f).v));
  return out;
}

bool same_up_to_vertex_relabel(const Multigraph& g, const Multigraph& h) {
  if (g.edges() != h.edges() || g.num_vertices() != h.num_vertices()) return false;
  // A vertex is pinned down by the multiset of edge ends it carries; two graphs
  // on the same edges are isomorphic over those edges iff the families agree.
  auto signature = [](const Multigraph& m) {
    std::map<int, std::vector<int>> incident;
    for (int v : m.vertices()) incident[v];
    for (int e : m.edges()) {
      incident[m.ends(e).u].push_back(e);
      incident[m.ends(e).v].push_back(e);
    }
    std::vector<std::vector<int>> family;
    for (auto& [v, list] : incident) {
      std::sort(list.begin(), list.end());
      family.push_back(std::move(list));
    }
    std::sort(family.begin(), family.end());
    return family;
  };
  return signature(g) == signature(h);
}

}  // namespace lvpoly
