#include "lvpoly/embedding.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "lvpoly/disjoint_sets.hpp"
#include "lvpoly/errors.hpp"

namespace lvpoly {

namespace {

using SideKey = std::vector<std::pair<int, int>>;

SideKey side_key(const BoundaryCircle& c, int skip_edge = -1) {
  SideKey key;
  for (const SideVisit& s : c.sides) {
    if (s.edge != skip_edge) key.push_back({s.edge, s.side});
  }
  std::sort(key.begin(), key.end());
  return key;
}

std::pair<int, int> sector_pair(const RotationSystem& r, int global) {
  const auto& ref = r.sector_ref(global);
  return {ref.vertex, ref.index};
}

std::map<int, std::vector<Sector>> copy_sectors(const RotationSystem& r) {
  std::map<int, std::vector<Sector>> out;
  for (int v : r.graph().vertices()) out[v] = r.sectors(v);
  return out;
}

std::map<int, int> copy_signs(const RotationSystem& r, int skip_edge = -1) {
  std::map<int, int> out;
  for (int e : r.edges()) {
    if (e != skip_edge) out[e] = r.sign(e);
  }
  return out;
}

// Assigns each circle of `trace` to a region via `lookup` and rebuilds region
// circle lists; region genera are taken from `genus`.
std::vector<Region> regions_from_lookup(const BoundaryTrace& trace, const std::map<int, int>& genus,
                                        const std::function<int(int)>& lookup) {
  std::map<int, Region> by_id;
  for (auto [id, g] : genus) by_id[id] = Region{id, g, {}};
  for (int c = 0; c < trace.count(); ++c) by_id.at(lookup(c)).circles.push_back(c);
  std::vector<Region> out;
  for (auto& [id, reg] : by_id) {
    if (!reg.circles.empty()) out.push_back(std::move(reg));
  }
  return out;
}

}  // namespace

EmbeddedGraph::EmbeddedGraph(RotationSystem rotation, std::vector<Region> regions)
    : rotation_(std::move(rotation)),
      trace_(trace_boundary(rotation_, rotation_.edges())),
      regions_(std::move(regions)) {
  std::sort(regions_.begin(), regions_.end(), [](const Region& a, const Region& b) { return a.id < b.id; });
  region_of_circle_.assign(trace_.count(), -1);
  for (std::size_t i = 0; i < regions_.size(); ++i) {
    const Region& reg = regions_[i];
    if (i > 0 && regions_[i - 1].id == reg.id) throw InputError("duplicate region id " + std::to_string(reg.id));
    if (reg.id < 0) throw InputError("negative region id " + std::to_string(reg.id));
    if (reg.genus < 0) throw InputError("region " + std::to_string(reg.id) + " has negative genus");
    if (reg.circles.empty()) throw InputError("region " + std::to_string(reg.id) + " has no boundary circle");
    for (int c : reg.circles) {
      if (c < 0 || c >= trace_.count()) {
        throw InputError("region " + std::to_string(reg.id) + " names circle " + std::to_string(c) +
                         " but there are " + std::to_string(trace_.count()) + " circles");
      }
      if (region_of_circle_[c] != -1) {
        throw InputError("circle " + std::to_string(c) + " assigned to regions " +
                         std::to_string(region_of_circle_[c]) + " and " + std::to_string(reg.id));
      }
      region_of_circle_[c] = reg.id;
    }
  }
  for (int c = 0; c < trace_.count(); ++c) {
    if (region_of_circle_[c] == -1) throw InputError("circle " + std::to_string(c) + " not assigned to a region");
  }
  for (const Region& reg : regions_) dagger_.add_vertex(reg.id);
  for (int e : edges()) dagger_.add_edge(e, region_of_side(e, 0), region_of_side(e, 1));
}

EmbeddedGraph EmbeddedGraph::cellular(RotationSystem rotation) {
  const int f = face_count(rotation, rotation.edges());
  std::vector<Region> regions;
  for (int c = 0; c < f; ++c) regions.push_back(Region{c, 0, {c}});
  return EmbeddedGraph(std::move(rotation), std::move(regions));
}

const Region& EmbeddedGraph::region(int id) const {
  auto it = std::lower_bound(regions_.begin(), regions_.end(), id,
                             [](const Region& r, int x) { return r.id < x; });
  if (it == regions_.end() || it->id != id) throw InputError("unknown region id " + std::to_string(id));
  return *it;
}

SurfaceReport validate(const EmbeddedGraph& emb) {
  const Multigraph& g = emb.graph();
  const RotationSystem& r = emb.rotation();
  SurfaceReport report;
  int chi = g.num_vertices() - g.num_edges();
  for (const Region& reg : emb.regions()) chi += 2 - reg.genus - static_cast<int>(reg.circles.size());

  // Vertices and regions are the pieces; circles tie a region to every
  // vertex they pass.
  std::map<int, int> region_index;
  for (const Region& reg : emb.regions()) region_index.emplace(reg.id, static_cast<int>(region_index.size()));
  const int nv = g.num_vertices();
  DisjointSets sets(nv + static_cast<int>(region_index.size()));
  const BoundaryTrace& trace = emb.circles();
  for (int c = 0; c < trace.count(); ++c) {
    const int rnode = nv + region_index.at(emb.region_of_circle(c));
    for (int s : trace.circles[c].sectors) sets.unite(rnode, g.vertex_index(r.sector_ref(s).vertex));
  }
  for (int e : g.edges()) {
    auto [u, v] = g.dense_ends(e);
    sets.unite(u, v);
  }
  report.components = sets.count();
  report.euler_characteristic = chi;
  report.euler_genus = 2 * report.components - chi;
  report.cellular = !r.has_pinch() && std::all_of(emb.regions().begin(), emb.regions().end(), [](const Region& reg) {
    return reg.genus == 0 && reg.circles.size() == 1;
  });
  // 2k - chi can be negative for a pseudo-surface (two spheres sharing a
  // point give -1); on a surface it cannot.
  if (report.euler_genus < 0 && !r.has_pinch()) {
    throw std::logic_error("negative Euler genus " + std::to_string(report.euler_genus) + " on a surface");
  }
  return report;
}

EmbeddingScheme::EmbeddingScheme(Multigraph g, Multigraph d) : graph(std::move(g)), dagger(std::move(d)) {
  if (graph.edges() != dagger.edges()) {
    throw InputError("scheme: graph and dagger edge sets differ");
  }
}

EmbeddingScheme derive_dagger(const EmbeddedGraph& emb) { return EmbeddingScheme(emb.graph(), emb.dagger()); }

int rho(const EmbeddingScheme& scheme, EdgeSet a) {
  scheme.graph.check_subset(a);
  return components(scheme.dagger, scheme.edges() - a);
}

int rho(const EmbeddedGraph& emb, EdgeSet a) {
  emb.graph().check_subset(a);
  return components(emb.dagger(), emb.edges() - a);
}

const char* to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::bridge: return "bridge";
    case EdgeKind::quasi_bridge_only: return "quasi-bridge";
    case EdgeKind::quasi_loop: return "quasi-loop";
    case EdgeKind::ordinary: return "ordinary";
  }
  return "?";
}

EdgeKind EdgeClass::kind() const {
  if (bridge) return EdgeKind::bridge;
  if (quasi_bridge) return EdgeKind::quasi_bridge_only;
  if (quasi_loop) return EdgeKind::quasi_loop;
  return EdgeKind::ordinary;
}

EdgeClass classify_edge(const EmbeddedGraph& emb, int e) {
  const Multigraph& g = emb.graph();
  EdgeClass c;
  c.loop = g.ends(e).is_loop();
  c.bridge = is_bridge(g, e);
  c.quasi_loop = rho(emb, EdgeSet::of({e})) > rho(emb, EdgeSet{});
  c.quasi_bridge = emb.region_of_side(e, 0) == emb.region_of_side(e, 1);
  return c;
}

EdgeClass classify_edge(const EmbeddingScheme& scheme, int e) {
  EdgeClass c;
  c.loop = scheme.graph.ends(e).is_loop();
  c.bridge = is_bridge(scheme.graph, e);
  c.quasi_loop = is_bridge(scheme.dagger, e);
  c.quasi_bridge = scheme.dagger.ends(e).is_loop();
  return c;
}

EmbeddingScheme delete_edge(const EmbeddingScheme& scheme, int e) {
  return EmbeddingScheme(delete_edge(scheme.graph, e), contract_edge(scheme.dagger, e));
}

EmbeddingScheme contract_edge(const EmbeddingScheme& scheme, int e) {
  return EmbeddingScheme(contract_edge(scheme.graph, e), delete_edge(scheme.dagger, e));
}

EmbeddedGraph delete_edge(const EmbeddedGraph& emb, int e) {
  const RotationSystem& r = emb.rotation();
  if (!r.edges().contains(e)) throw InputError("unknown edge id " + std::to_string(e));

  auto sectors = copy_sectors(r);
  for (auto& [v, list] : sectors) {
    for (Sector& s : list) std::erase_if(s, [e](const HalfEdge& h) { return h.edge == e; });
  }
  RotationSystem r2(delete_edge(r.graph(), e), std::move(sectors), copy_signs(r, e));
  const BoundaryTrace t2 = trace_boundary(r2, r2.edges());

  const BoundaryTrace& t1 = emb.circles();
  std::map<SideKey, int> kept;
  std::map<std::pair<int, int>, int> kept_empty;
  for (int c = 0; c < t1.count(); ++c) {
    const BoundaryCircle& circle = t1.circles[c];
    if (circle.sides.empty()) {
      kept_empty[sector_pair(r, circle.sectors.front())] = emb.region_of_circle(c);
    } else if (std::none_of(circle.sides.begin(), circle.sides.end(),
                            [e](const SideVisit& s) { return s.edge == e; })) {
      kept[side_key(circle)] = emb.region_of_circle(c);
    }
  }

  const int r1 = emb.region_of_side(e, 0);
  const int r2id = emb.region_of_side(e, 1);
  const int merged = std::min(r1, r2id);
  auto chi_of = [](const Region& reg) { return 2 - reg.genus - static_cast<int>(reg.circles.size()); };
  int merged_chi = chi_of(emb.region(r1)) - 1;
  if (r1 != r2id) merged_chi += chi_of(emb.region(r2id));

  auto survivor = [&](int id) { return id == r1 || id == r2id ? merged : id; };
  auto lookup = [&](int c) {
    const BoundaryCircle& circle = t2.circles[c];
    if (circle.sides.empty()) {
      auto it = kept_empty.find(sector_pair(r2, circle.sectors.front()));
      return it == kept_empty.end() ? merged : survivor(it->second);
    }
    auto it = kept.find(side_key(circle));
    return it == kept.end() ? merged : survivor(it->second);
  };
  std::map<int, int> genus;
  for (const Region& reg : emb.regions()) {
    if (reg.id != r1 && reg.id != r2id) genus[reg.id] = reg.genus;
  }
  genus[merged] = 0;
  std::vector<Region> regions = regions_from_lookup(t2, genus, lookup);
  for (Region& reg : regions) {
    if (reg.id != merged) continue;
    reg.genus = 2 - merged_chi - static_cast<int>(reg.circles.size());
    if (reg.genus < 0) throw std::logic_error("delete_edge: merged region has negative genus");
  }
  return EmbeddedGraph(std::move(r2), std::move(regions));
}

EmbeddedGraph contract_edge(const EmbeddedGraph& emb, int e) {
  const RotationSystem& r = emb.rotation();
  const EdgeEnds ends = r.graph().ends(e);
  if (ends.is_loop()) throw DomainError("topological contraction is implemented for non-loop edges only");

  std::map<int, int> genus;
  for (const Region& reg : emb.regions()) genus[reg.id] = reg.genus;

  if (r.sign(e) < 0) {
    // Flip the disc at the end-1 side so that e becomes untwisted.
    const auto [v, idx] = sector_pair(r, r.sector_of({e, 1}));
    RotationSystem flipped = flip_sector(r, v, idx);
    const int global = r.sector_of({e, 1});
    std::array<bool, 64> swapped{};
    for (int code : r.sector_codes(global)) {
      if ((code & 1) == 0) swapped[code >> 1] = true;
    }
    std::map<SideKey, int> old;
    std::map<std::pair<int, int>, int> old_empty;
    for (int c = 0; c < emb.circles().count(); ++c) {
      const BoundaryCircle& circle = emb.circles().circles[c];
      if (circle.sides.empty()) {
        old_empty[sector_pair(r, circle.sectors.front())] = emb.region_of_circle(c);
      } else {
        old[side_key(circle)] = emb.region_of_circle(c);
      }
    }
    const BoundaryTrace t = trace_boundary(flipped, flipped.edges());
    auto lookup = [&](int c) {
      const BoundaryCircle& circle = t.circles[c];
      if (circle.sides.empty()) return old_empty.at(sector_pair(flipped, circle.sectors.front()));
      SideKey key;
      for (const SideVisit& s : circle.sides) key.push_back({s.edge, swapped[s.edge] ? 1 - s.side : s.side});
      std::sort(key.begin(), key.end());
      return old.at(key);
    };
    EmbeddedGraph untwisted(flipped, regions_from_lookup(t, genus, lookup));
    return contract_edge(untwisted, e);
  }

  const int keep = std::min(ends.u, ends.v);
  const int gone = std::max(ends.u, ends.v);
  const int su = r.sector_of({e, 0});
  const int sv = r.sector_of({e, 1});

  auto opened = [&](int global, int code) {
    const auto& codes = r.sector_codes(global);
    const auto at = std::find(codes.begin(), codes.end(), code) - codes.begin();
    Sector out;
    const int m = static_cast<int>(codes.size());
    for (int i = 1; i < m; ++i) out.push_back(HalfEdge::from_code(codes[(at + i) % m]));
    return out;
  };
  Sector merged_sector = opened(su, 2 * e);
  for (const HalfEdge& h : opened(sv, 2 * e + 1)) merged_sector.push_back(h);

  auto sectors = copy_sectors(r);
  std::map<std::pair<int, int>, std::pair<int, int>> moved;  // old (vertex, idx) -> new
  std::vector<Sector> keep_list;
  int merged_index = -1;
  for (int v : {keep, gone}) {
    for (int global = 0; global < r.num_sectors(); ++global) {
      const auto [vertex, i] = sector_pair(r, global);
      if (vertex != v) continue;
      if (global == su || global == sv) {
        if (merged_index == -1) {
          merged_index = static_cast<int>(keep_list.size());
          keep_list.push_back(merged_sector);
        }
        continue;
      }
      moved[{v, i}] = {keep, static_cast<int>(keep_list.size())};
      keep_list.push_back(r.sectors(v)[i]);
    }
  }
  sectors.erase(gone);
  sectors[keep] = std::move(keep_list);
  for (const auto& [v, list] : sectors) {
    if (v == keep) continue;
    for (int i = 0; i < static_cast<int>(list.size()); ++i) moved[{v, i}] = {v, i};
  }

  RotationSystem r2(contract_edge(r.graph(), e), std::move(sectors), copy_signs(r, e));
  const BoundaryTrace t2 = trace_boundary(r2, r2.edges());

  std::map<SideKey, int> old;
  std::map<std::pair<int, int>, int> old_empty;
  int vanished_region = -1;
  for (int c = 0; c < emb.circles().count(); ++c) {
    const BoundaryCircle& circle = emb.circles().circles[c];
    if (circle.sides.empty()) {
      old_empty[moved.at(sector_pair(r, circle.sectors.front()))] = emb.region_of_circle(c);
      continue;
    }
    SideKey key = side_key(circle, e);
    if (key.empty()) {
      vanished_region = emb.region_of_circle(c);
    } else {
      old[key] = emb.region_of_circle(c);
    }
  }
  if (t2.count() != emb.circles().count()) throw std::logic_error("contract_edge: circle count changed");
  auto lookup = [&](int c) {
    const BoundaryCircle& circle = t2.circles[c];
    if (circle.sides.empty()) {
      const auto where = sector_pair(r2, circle.sectors.front());
      if (where == std::pair{keep, merged_index}) return vanished_region;
      return old_empty.at(where);
    }
    return old.at(side_key(circle));
  };
  return EmbeddedGraph(std::move(r2), regions_from_lookup(t2, genus, lookup));
}

ComplementStats complement_stats(const EmbeddedGraph& emb, EdgeSet a) {
  return complement_stats(emb, a, validate(emb));
}

ComplementStats complement_stats(const EmbeddedGraph& emb, EdgeSet a, const SurfaceReport& surface) {
  const RotationSystem& r = emb.rotation();
  if (r.has_pinch()) throw DomainError("complement_stats: defined for graphs in surfaces only (pinch vertex present)");
  emb.graph().check_subset(a);
  ComplementStats s;
  s.k_complement = rho(emb, a);
  s.boundary_circles = face_count(r, a);
  const int chi_complement = surface.euler_characteristic - (emb.graph().num_vertices() - a.size());
  s.gamma_complement = 2 * s.k_complement - s.boundary_circles - chi_complement;
  s.gamma_neighborhood = euler_genus(r, a);
  return s;
}

}  // namespace lvpoly
