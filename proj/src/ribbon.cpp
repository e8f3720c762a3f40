#include "lvpoly/ribbon.hpp"

#include <algorithm>
#include <bitset>
#include <stdexcept>
#include <string>

#include "lvpoly/disjoint_sets.hpp"
#include "lvpoly/errors.hpp"

namespace lvpoly {

namespace {

int node(int code, int k) { return 2 * code + k; }

// Cyclic successor/predecessor of each half-edge of A inside its sector.
struct ArcTable {
  std::array<int, 128> next{};
  std::array<int, 128> prev{};
  std::vector<int> empty_sectors;
};

ArcTable build_arcs(const RotationSystem& r, EdgeSet a) {
  ArcTable t;
  std::vector<int> present;
  for (int s = 0; s < r.num_sectors(); ++s) {
    present.clear();
    for (int code : r.sector_codes(s)) {
      if (a.contains(code >> 1)) present.push_back(code);
    }
    if (present.empty()) {
      t.empty_sectors.push_back(s);
      continue;
    }
    const int m = static_cast<int>(present.size());
    for (int i = 0; i < m; ++i) {
      t.next[present[i]] = present[(i + 1) % m];
      t.prev[present[(i + 1) % m]] = present[i];
    }
  }
  return t;
}

int side_partner(const RotationSystem& r, int n) {
  const int code = n >> 1;
  const int k = n & 1;
  const int e = code >> 1;
  const int end = code & 1;
  const int other = 2 * e + (1 - end);
  return r.sign(e) > 0 ? node(other, 1 - k) : node(other, k);
}

int arc_partner(const ArcTable& t, int n) {
  const int code = n >> 1;
  return (n & 1) ? node(t.next[code], 0) : node(t.prev[code], 1);
}

// Which side of its edge the corner n lies on.
int side_of_corner(const RotationSystem& r, int n) {
  const int code = n >> 1;
  const int k = n & 1;
  if ((code & 1) == 0) return k;
  return r.sign(code >> 1) > 0 ? 1 - k : k;
}

void check_ids(const RotationSystem& r, EdgeSet a) { r.graph().check_subset(a); }

}  // namespace

RotationSystem::RotationSystem(Multigraph graph, std::map<int, std::vector<Sector>> sectors,
                               std::map<int, int> signs)
    : graph_(std::move(graph)), sectors_(std::move(sectors)) {
  sector_of_code_.fill(-1);
  signs_.fill(1);
  for (auto [e, s] : signs) {
    if (!graph_.has_edge(e)) throw InputError("sign given for unknown edge " + std::to_string(e));
    if (s != 1 && s != -1) throw InputError("sign of edge " + std::to_string(e) + " must be +1 or -1");
    signs_[e] = s;
  }
  for (const auto& [v, list] : sectors_) {
    if (!graph_.has_vertex(v)) throw InputError("rotation given for unknown vertex " + std::to_string(v));
  }
  for (int v : graph_.vertices()) {
    auto it = sectors_.find(v);
    if (it == sectors_.end() || it->second.empty()) {
      throw InputError("vertex " + std::to_string(v) + " has no sector");
    }
    for (int i = 0; i < static_cast<int>(it->second.size()); ++i) {
      const int global = static_cast<int>(sector_refs_.size());
      sector_refs_.push_back({v, i});
      std::vector<int> codes;
      for (const HalfEdge& h : it->second[i]) {
        if (!graph_.has_edge(h.edge) || (h.end != 0 && h.end != 1)) {
          throw InputError("vertex " + std::to_string(v) + ": unknown half-edge " +
                           std::to_string(h.edge) + "." + std::to_string(h.end));
        }
        const EdgeEnds ee = graph_.ends(h.edge);
        if ((h.end == 0 ? ee.u : ee.v) != v) {
          throw InputError("vertex " + std::to_string(v) + ": half-edge " + std::to_string(h.edge) + "." +
                           std::to_string(h.end) + " belongs to vertex " +
                           std::to_string(h.end == 0 ? ee.u : ee.v));
        }
        if (sector_of_code_[h.code()] != -1) {
          throw InputError("vertex " + std::to_string(v) + ": half-edge " + std::to_string(h.edge) + "." +
                           std::to_string(h.end) + " listed twice");
        }
        sector_of_code_[h.code()] = global;
        codes.push_back(h.code());
      }
      flat_.push_back(std::move(codes));
    }
  }
  for (int e : graph_.edges()) {
    for (int end = 0; end < 2; ++end) {
      if (sector_of_code_[2 * e + end] == -1) {
        const int v = end == 0 ? graph_.ends(e).u : graph_.ends(e).v;
        throw InputError("vertex " + std::to_string(v) + ": half-edge " + std::to_string(e) + "." +
                         std::to_string(end) + " missing from rotation");
      }
    }
  }
}

RotationSystem RotationSystem::ribbon(Multigraph graph, std::map<int, Sector> rotation,
                                      std::map<int, int> signs) {
  std::map<int, std::vector<Sector>> sectors;
  for (int v : graph.vertices()) {
    auto it = rotation.find(v);
    sectors[v] = {it == rotation.end() ? Sector{} : it->second};
  }
  for (const auto& [v, s] : rotation) {
    if (!graph.has_vertex(v)) throw InputError("rotation given for unknown vertex " + std::to_string(v));
  }
  return RotationSystem(std::move(graph), std::move(sectors), std::move(signs));
}

const std::vector<Sector>& RotationSystem::sectors(int v) const {
  auto it = sectors_.find(v);
  if (it == sectors_.end()) throw InputError("unknown vertex id " + std::to_string(v));
  return it->second;
}

int RotationSystem::sign(int e) const { return signs_[e]; }

BoundaryTrace trace_boundary(const RotationSystem& r, EdgeSet a) {
  check_ids(r, a);
  const ArcTable arcs = build_arcs(r, a);
  BoundaryTrace trace;
  trace.side_circle.fill(-1);
  trace.corner_circle.fill(-1);
  for (int e : a) {
    for (int s = 0; s < 2; ++s) {
      if (trace.side_circle[2 * e + s] != -1) continue;
      const int id = trace.count();
      BoundaryCircle circle;
      const int start = node(2 * e, s);
      int cur = start;
      do {
        const int far = side_partner(r, cur);
        const int edge = cur >> 2;
        const int side = side_of_corner(r, cur);
        circle.sides.push_back({edge, side, ((cur >> 1) & 1) == 0});
        trace.side_circle[2 * edge + side] = id;
        trace.corner_circle[cur] = id;
        trace.corner_circle[far] = id;
        circle.sectors.push_back(r.sector_of(HalfEdge::from_code(far >> 1)));
        cur = arc_partner(arcs, far);
      } while (cur != start);
      trace.circles.push_back(std::move(circle));
    }
  }
  for (int s : arcs.empty_sectors) {
    BoundaryCircle circle;
    circle.sectors.push_back(s);
    trace.circles.push_back(std::move(circle));
  }
  return trace;
}

int face_count(const RotationSystem& r, EdgeSet a) {
  check_ids(r, a);
  const ArcTable arcs = build_arcs(r, a);
  std::bitset<256> seen;
  int count = static_cast<int>(arcs.empty_sectors.size());
  for (int e : a) {
    for (int s = 0; s < 2; ++s) {
      const int start = node(2 * e, s);
      if (seen[start]) continue;
      ++count;
      int cur = start;
      do {
        seen[cur] = true;
        const int far = side_partner(r, cur);
        seen[far] = true;
        cur = arc_partner(arcs, far);
      } while (cur != start);
    }
  }
  return count;
}

int surface_components(const RotationSystem& r, EdgeSet a) {
  check_ids(r, a);
  DisjointSets sets(r.num_sectors());
  for (int e : a) sets.unite(r.sector_of({e, 0}), r.sector_of({e, 1}));
  return sets.count();
}

int euler_genus(const RotationSystem& r, EdgeSet a) {
  const int chi = r.num_sectors() - a.size();
  return 2 * surface_components(r, a) - face_count(r, a) - chi;
}

bool is_orientable(const RotationSystem& r, EdgeSet a) {
  check_ids(r, a);
  // Parity labels on sectors; a twisted band flips the parity across it.
  const int n = r.num_sectors();
  std::vector<int> parity(n, -1);
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int e : a) {
    const int s0 = r.sector_of({e, 0});
    const int s1 = r.sector_of({e, 1});
    const int flip = r.sign(e) < 0 ? 1 : 0;
    adj[s0].push_back({s1, flip});
    adj[s1].push_back({s0, flip});
  }
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (parity[root] != -1) continue;
    parity[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      const int s = stack.back();
      stack.pop_back();
      for (auto [t, flip] : adj[s]) {
        const int want = parity[s] ^ flip;
        if (parity[t] == -1) {
          parity[t] = want;
          stack.push_back(t);
        } else if (parity[t] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

RotationSystem dual(const RotationSystem& r) {
  if (r.has_pinch()) throw DomainError("dual: pinch vertex present; use the G-dagger construction");
  const BoundaryTrace trace = trace_boundary(r, r.edges());
  Multigraph g;
  for (int c = 0; c < trace.count(); ++c) g.add_vertex(c);
  for (int e : r.edges()) g.add_edge(e, trace.circle_of_side(e, 0), trace.circle_of_side(e, 1));
  std::map<int, Sector> rotation;
  std::array<bool, 128> forward{};
  for (int c = 0; c < trace.count(); ++c) {
    Sector& s = rotation[c];
    for (const SideVisit& sv : trace.circles[c].sides) {
      s.push_back({sv.edge, sv.side});
      forward[2 * sv.edge + sv.side] = sv.forward;
    }
  }
  std::map<int, int> signs;
  for (int e : r.edges()) signs[e] = forward[2 * e] != forward[2 * e + 1] ? 1 : -1;
  return RotationSystem::ribbon(std::move(g), std::move(rotation), std::move(signs));
}

RotationSystem twist(const RotationSystem& r, EdgeSet c) {
  check_ids(r, c);
  std::map<int, std::vector<Sector>> sectors;
  for (int v : r.graph().vertices()) sectors[v] = r.sectors(v);
  std::map<int, int> signs;
  for (int e : r.edges()) signs[e] = c.contains(e) ? -r.sign(e) : r.sign(e);
  return RotationSystem(r.graph(), std::move(sectors), std::move(signs));
}

RotationSystem flip_sector(const RotationSystem& r, int vertex, int sector_index) {
  std::map<int, std::vector<Sector>> sectors;
  for (int v : r.graph().vertices()) sectors[v] = r.sectors(v);
  auto& list = sectors.at(vertex);
  if (sector_index < 0 || sector_index >= static_cast<int>(list.size())) {
    throw InputError("flip_sector: vertex " + std::to_string(vertex) + " has no sector " +
                     std::to_string(sector_index));
  }
  Sector& flipped = list[sector_index];
  std::reverse(flipped.begin(), flipped.end());
  std::array<int, 64> ends_inside{};
  for (const HalfEdge& h : flipped) ++ends_inside[h.edge];
  std::map<int, int> signs;
  for (int e : r.edges()) signs[e] = ends_inside[e] == 1 ? -r.sign(e) : r.sign(e);
  return RotationSystem(r.graph(), std::move(sectors), std::move(signs));
}

bool is_quasi_tree(const RotationSystem& r, EdgeSet a) {
  return surface_components(r, a) == 1 && face_count(r, a) == 1;
}

Medial medial(const RotationSystem& r) {
  if (r.has_pinch()) throw DomainError("medial: pinch vertex present");
  const EdgeSet all = r.edges();
  const ArcTable arcs = build_arcs(r, all);

  // Medial edge per vertex arc, numbered by the half-edge code starting it.
  std::array<int, 128> medial_of_arc{};
  std::vector<int> arc_start;
  for (int code = 0; code < 128; ++code) {
    if (all.contains(code >> 1)) {
      medial_of_arc[code] = static_cast<int>(arc_start.size());
      arc_start.push_back(code);
    }
  }
  if (arc_start.size() > 64) throw CapExceeded("medial graph edge count", static_cast<int>(arc_start.size()), 64);

  // Medial half-edge sitting at source corner (code, k).
  auto at_corner = [&](int code, int k) -> HalfEdge {
    if (k == 1) return {medial_of_arc[code], 0};
    return {medial_of_arc[arcs.prev[code]], 1};
  };
  auto flipped_end = [&](int code) { return r.sign(code >> 1) < 0 && (code & 1) == 1; };

  Multigraph g;
  for (int e : all) g.add_vertex(e);
  std::map<int, int> signs;
  for (int m = 0; m < static_cast<int>(arc_start.size()); ++m) {
    const int from = arc_start[m];
    const int to = arcs.next[from];
    g.add_edge(m, from >> 1, to >> 1);
    signs[m] = flipped_end(from) == flipped_end(to) ? 1 : -1;
  }
  std::map<int, Sector> rotation;
  for (int e : all) {
    const int h0 = 2 * e;
    const int h1 = 2 * e + 1;
    const bool plus = r.sign(e) > 0;
    rotation[e] = {at_corner(h0, 0), at_corner(h0, 1), at_corner(h1, plus ? 0 : 1),
                   at_corner(h1, plus ? 1 : 0)};
  }
  return Medial{RotationSystem::ribbon(std::move(g), std::move(rotation), std::move(signs)),
                std::move(arc_start)};
}

TaitGraphs tait_graphs(const Medial& m) {
  const RotationSystem& f = m.graph;
  const BoundaryTrace trace = trace_boundary(f, f.edges());
  std::vector<int> colour(trace.count(), -1);  // 0 black, 1 white
  auto paint = [&](int circle, int c) {
    if (colour[circle] != -1 && colour[circle] != c) {
      throw std::logic_error("medial faces are not checkerboard coloured");
    }
    colour[circle] = c;
  };
  std::vector<std::array<int, 4>> around;
  for (int v : f.graph().vertices()) {
    const Sector& rot = f.sectors(v).front();
    std::array<int, 4> faces{};
    for (int i = 0; i < 4; ++i) {
      faces[i] = trace.circle_of_corner(rot[i], 1);
      paint(faces[i], i % 2);
    }
    around.push_back(faces);
  }
  std::array<std::map<int, int>, 2> index;
  TaitGraphs out;
  for (int c = 0; c < trace.count(); ++c) {
    if (colour[c] == -1) continue;
    auto& idx = index[colour[c]];
    const int id = static_cast<int>(idx.size());
    idx[c] = id;
    (colour[c] == 0 ? out.black : out.white).add_vertex(id);
  }
  int i = 0;
  for (int v : f.graph().vertices()) {
    const auto& faces = around[i++];
    out.black.add_edge(v, index[0].at(faces[0]), index[0].at(faces[2]));
    out.white.add_edge(v, index[1].at(faces[1]), index[1].at(faces[3]));
  }
  return out;
}

}  // namespace lvpoly
