#include <doctest.h>

#include "corpus.hpp"
#include "lvpoly/embedding.hpp"
#include "lvpoly/errors.hpp"

using namespace lvpoly;
using lvpoly::testing::corpus;
using lvpoly::testing::make_graph;

namespace {

const EmbeddedGraph& named(const std::string& name) {
  for (const auto& c : corpus()) {
    if (c.name == name) return c.emb;
  }
  throw std::out_of_range(name);
}

EmbeddedGraph plane_loop() {
  return EmbeddedGraph::cellular(RotationSystem::ribbon(make_graph({{0, 0, 0}}), {{0, {{0, 0}, {0, 1}}}}));
}

}  // namespace

TEST_CASE("surface reports") {
  const SurfaceReport loop = validate(plane_loop());
  CHECK(loop.euler_genus == 0);
  CHECK(loop.components == 1);
  CHECK(loop.cellular);

  const SurfaceReport annulus = validate(named("torus-loop"));
  CHECK(annulus.euler_characteristic == 0);
  CHECK(annulus.components == 1);
  CHECK(annulus.euler_genus == 2);
  CHECK_FALSE(annulus.cellular);

  const SurfaceReport theta = validate(named("theta-torus"));
  CHECK(theta.euler_genus == 2);
  CHECK(theta.cellular);
}

TEST_CASE("cellular embeddings live on the ribbon surface") {
  for (const auto& c : corpus()) {
    if (!c.surface.cellular) continue;
    CHECK(c.surface.euler_genus == euler_genus(c.emb.rotation()));
    CHECK(c.surface.components == components(c.emb.graph(), c.emb.edges()));
  }
}

TEST_CASE("dagger graphs") {
  const Multigraph loop = plane_loop().dagger();
  CHECK(loop.num_vertices() == 2);
  CHECK_FALSE(loop.ends(0).is_loop());

  const Multigraph annulus = named("torus-loop").dagger();
  CHECK(annulus.num_vertices() == 1);
  CHECK(annulus.ends(0).is_loop());

  const Multigraph theta = named("theta-torus").dagger();
  CHECK(theta.num_vertices() == 1);
  CHECK(theta.num_edges() == 3);
  for (int e : theta.edges()) CHECK(theta.ends(e).is_loop());
}

TEST_CASE("region counts") {
  const EmbeddedGraph loop = plane_loop();
  CHECK(rho(loop, EdgeSet{}) == 1);
  CHECK(rho(loop, EdgeSet::of({0})) == 2);

  const EmbeddedGraph& annulus = named("torus-loop");
  CHECK(rho(annulus, EdgeSet{}) == 1);
  CHECK(rho(annulus, EdgeSet::of({0})) == 1);

  const EmbeddedGraph& theta = named("theta-torus");
  for_each_subset(theta.edges(), [&](EdgeSet a) { CHECK(rho(theta, a) == 1); });
}

TEST_CASE("bridges of spanning subgraphs do not split regions") {
  for (const auto& c : corpus()) {
    const Multigraph& g = c.emb.graph();
    if (g.num_edges() > 8) continue;
    for_each_subset(g.edges(), [&](EdgeSet a) {
      for (int e : g.edges() - a) {
        if (components(g, a.with(e)) < components(g, a)) CHECK(rho(c.emb, a.with(e)) == rho(c.emb, a));
      }
    });
  }
}

TEST_CASE("edge classification examples") {
  const EdgeClass loop = classify_edge(plane_loop(), 0);
  CHECK(loop.kind() == EdgeKind::quasi_loop);

  const EdgeClass annulus = classify_edge(named("torus-loop"), 0);
  CHECK(annulus.kind() == EdgeKind::quasi_bridge_only);
  CHECK(annulus.quasi_bridge);
  CHECK_FALSE(annulus.bridge);
  CHECK_FALSE(annulus.quasi_loop);

  const RotationSystem p3 = RotationSystem::ribbon(make_graph({{0, 0, 1}, {1, 1, 2}}),
                                                   {{0, {{0, 0}}}, {1, {{0, 1}, {1, 0}}}, {2, {{1, 1}}}});
  const EmbeddedGraph path = EmbeddedGraph::cellular(p3);
  CHECK(classify_edge(path, 0).kind() == EdgeKind::bridge);
  CHECK(classify_edge(path, 1).kind() == EdgeKind::bridge);
}

TEST_CASE("scheme minors") {
  const EmbeddingScheme loop = derive_dagger(plane_loop());
  const EmbeddingScheme lone = delete_edge(loop, 0);
  CHECK(lone.graph.num_vertices() == 1);
  CHECK(lone.dagger.num_vertices() == 1);
  CHECK(lone.edges().empty());

  const EmbeddingScheme annulus = derive_dagger(named("torus-loop"));
  const EmbeddingScheme pinched = contract_edge(annulus, 0);
  CHECK(pinched.graph.num_edges() == 0);
  CHECK(pinched.dagger.num_edges() == 0);
  CHECK(pinched.dagger.num_vertices() == 1);

  const EmbeddingScheme theta = derive_dagger(named("theta-torus"));
  const EmbeddingScheme bouquet = contract_edge(theta, 0);
  CHECK(bouquet.graph.num_vertices() == 1);
  CHECK(same_up_to_vertex_relabel(bouquet.dagger, delete_edge(theta.dagger, 0)));
}

TEST_CASE("topological minors match scheme minors") {
  int contractions = 0;
  for (const auto& c : corpus()) {
    const EmbeddingScheme scheme = derive_dagger(c.emb);
    for (int e : c.emb.edges()) {
      const EmbeddingScheme del = derive_dagger(delete_edge(c.emb, e));
      CHECK(same_up_to_vertex_relabel(del.graph, delete_edge(scheme.graph, e)));
      CHECK(same_up_to_vertex_relabel(del.dagger, contract_edge(scheme.dagger, e)));
      if (c.emb.graph().ends(e).is_loop()) {
        CHECK_THROWS_AS(contract_edge(c.emb, e), DomainError);
        continue;
      }
      const EmbeddedGraph contracted = contract_edge(c.emb, e);
      const EmbeddingScheme con = derive_dagger(contracted);
      CHECK(same_up_to_vertex_relabel(con.graph, contract_edge(scheme.graph, e)));
      CHECK(same_up_to_vertex_relabel(con.dagger, delete_edge(scheme.dagger, e)));
      CHECK(validate(contracted).euler_genus == c.surface.euler_genus);
      ++contractions;
    }
  }
  CHECK(contractions > 200);
}

TEST_CASE("complement statistics") {
  const RotationSystem edge = RotationSystem::ribbon(make_graph({{0, 0, 1}}), {{0, {{0, 0}}}, {1, {{0, 1}}}});
  const ComplementStats single = complement_stats(EmbeddedGraph::cellular(edge), EdgeSet{});
  CHECK(single.k_complement == 1);
  CHECK(single.gamma_complement == 0);
  CHECK(single.gamma_neighborhood == 0);

  const ComplementStats annulus = complement_stats(named("torus-loop"), EdgeSet::of({0}));
  CHECK(annulus.k_complement == 1);
  CHECK(annulus.gamma_complement == 0);
  CHECK(annulus.gamma_neighborhood == 0);
  CHECK(annulus.boundary_circles == 2);

  for (const auto& c : corpus()) {
    if (c.pinch) {
      CHECK_THROWS_AS(complement_stats(c.emb, EdgeSet{}), DomainError);
      continue;
    }
    const RotationSystem& r = c.emb.rotation();
    if (r.edges().size() > 8) continue;
    const bool cellular = c.surface.cellular;
    const RotationSystem d = cellular ? dual(r) : r;
    for_each_subset(r.edges(), [&](EdgeSet a) {
      const ComplementStats s = complement_stats(c.emb, a, c.surface);
      CHECK(s.boundary_circles == face_count(r, a));
      CHECK(s.gamma_neighborhood == euler_genus(r, a));
      CHECK(s.k_complement == rho(c.emb, a));
      if (cellular) {
        CHECK(s.gamma_complement == euler_genus(d, r.edges() - a));
        CHECK(s.k_complement == components(d.graph(), r.edges() - a));
      }
    });
  }
}

TEST_CASE("malformed region data is rejected") {
  const RotationSystem loop = RotationSystem::ribbon(make_graph({{0, 0, 0}}), {{0, {{0, 0}, {0, 1}}}});
  CHECK_THROWS_AS(EmbeddedGraph(loop, {Region{0, 0, {0}}}), InputError);
  CHECK_THROWS_AS(EmbeddedGraph(loop, {Region{0, 0, {0, 1}}, Region{1, 0, {1}}}), InputError);
  CHECK_THROWS_AS(EmbeddedGraph(loop, {Region{0, -1, {0, 1}}}), InputError);
  CHECK_THROWS_AS(EmbeddedGraph(loop, {Region{0, 0, {0, 2}}}), InputError);
}
