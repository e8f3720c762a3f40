#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "lvpoly/errors.hpp"
#include "lvpoly/invariants.hpp"
#include "lvpoly/matroid.hpp"

using namespace lvpoly;
using lvpoly::testing::corpus;
using lvpoly::testing::make_graph;

namespace {

const MPolynomial x = MPolynomial::var(Var::x);
const MPolynomial y = MPolynomial::var(Var::y);
const MPolynomial z = MPolynomial::var(Var::z);

const EmbeddedGraph& named(const std::string& name) {
  for (const auto& c : corpus()) {
    if (c.name == name) return c.emb;
  }
  throw std::out_of_range(name);
}

// Classical deletion-contraction on the abstract graph.
MPolynomial tutte_oracle(const Multigraph& g) {
  if (g.edges().empty()) return 1;
  const int e = g.edges().min_id();
  if (g.ends(e).is_loop()) return y * tutte_oracle(delete_edge(g, e));
  if (is_bridge(g, e)) return x * tutte_oracle(contract_edge(g, e));
  return tutte_oracle(delete_edge(g, e)) + tutte_oracle(contract_edge(g, e));
}

MPolynomial shifted(Var v, int power) { return pow(MPolynomial::var(v) - 1, power); }

// Las Vergnas polynomial read straight off genus data of G and its dual.
MPolynomial lv_oracle(const RotationSystem& g) {
  const RotationSystem d = dual(g);
  const Multigraph& ab = g.graph();
  const int gamma = euler_genus(g);
  const int k = components(ab, ab.edges());
  MPolynomial sum;
  for_each_subset(g.edges(), [&](EdgeSet a) {
    const EdgeSet ac = g.edges() - a;
    const int twice = gamma - euler_genus(g, a) + euler_genus(d, ac);
    REQUIRE(twice % 2 == 0);
    sum += shifted(Var::x, rank(ab, ab.edges()) - rank(ab, a)) * shifted(Var::y, components(d.graph(), ac) - k) *
           pow(z, twice / 2);
  });
  return sum;
}

Rational at(const MPolynomial& p, std::initializer_list<std::pair<Var, int>> values) {
  Point pt;
  for (int v = 0; v < kNumVars; ++v) pt.set_square(static_cast<Var>(v), 1);
  for (const auto& [v, value] : values) pt.set(v, value);
  return p.evaluate(pt);
}

}  // namespace

TEST_CASE("Tutte polynomial examples") {
  CHECK(tutte(make_graph({{0, 0, 1}})) == x);
  CHECK(tutte(make_graph({{0, 0, 0}})) == y);
  CHECK(tutte(make_graph({{0, 0, 1}, {1, 0, 1}, {2, 0, 1}})).to_string() == "y + y^2 + x");
  const RankMatroid c = cycle_matroid(make_graph({{0, 0, 1}, {1, 1, 2}, {2, 2, 0}, {3, 0, 0}}));
  const MatroidPerspective same = MatroidPerspective::unchecked(c, c);
  CHECK(tutte_perspective(same) == tutte(c));
  CHECK(tutte_perspective(same, Method::recursion) == tutte(c));
}

TEST_CASE("Tutte polynomial against deletion-contraction") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    Multigraph g;
    const int n = 1 + trial % 5;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int e = 0; e < trial % 9; ++e) g.add_edge(e, pick(rng), pick(rng));
    const MPolynomial t = tutte(g);
    CHECK(t == tutte_oracle(g));
    CHECK(at(t, {{Var::x, 2}, {Var::y, 2}}) == Rational(1 << g.num_edges()));
  }
}

TEST_CASE("Las Vergnas polynomial of theta on the torus") {
  const MPolynomial expected = 1 + 3 * z + 2 * z * z + x * z * z;
  const EmbeddedGraph& theta = named("theta-torus");
  CHECK(las_vergnas_cellular(theta.rotation()) == expected);
  CHECK(las_vergnas_embedded(theta) == expected);
  CHECK(las_vergnas_embedded(theta, Method::recursion) == expected);
  CHECK(tutte_perspective(las_vergnas_perspective(derive_dagger(theta))) == expected);
  CHECK(tutte_perspective(las_vergnas_perspective(derive_dagger(theta)), Method::recursion) == expected);
  CHECK(expected.to_string() == "1 + 3z + 2z^2 + xz^2");
}

TEST_CASE("Las Vergnas polynomial examples") {
  const EmbeddedGraph loop =
      EmbeddedGraph::cellular(RotationSystem::ribbon(make_graph({{0, 0, 0}}), {{0, {{0, 0}, {0, 1}}}}));
  CHECK(las_vergnas_embedded(loop, Method::recursion) == y);
  CHECK(las_vergnas_embedded(named("torus-loop")) == 1 + z);
  CHECK(las_vergnas_embedded(named("torus-loop"), Method::recursion) == 1 + z);
  CHECK(tutte_perspective(las_vergnas_perspective(derive_dagger(named("torus-loop")))) == 1 + z);
  CHECK(las_vergnas_cellular(named("twisted-loop").rotation()) == 1 + z);

  const RotationSystem interleaved = RotationSystem::ribbon(make_graph({{0, 0, 0}, {1, 0, 0}}),
                                                            {{0, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}}});
  const MPolynomial l = las_vergnas_cellular(interleaved);
  CHECK(l == 1 + 2 * z + z * z);
  CHECK(l == tutte_perspective(las_vergnas_perspective(derive_dagger(EmbeddedGraph::cellular(interleaved))),
                               Method::recursion));
  const RotationSystem pinched(make_graph({{0, 0, 0}, {1, 0, 0}}),
                               {{0, {Sector{{0, 0}, {0, 1}}, Sector{{1, 0}, {1, 1}}}}});
  CHECK_THROWS_AS(las_vergnas_cellular(pinched), DomainError);
}

TEST_CASE("cellular Las Vergnas polynomial against the genus oracle") {
  for (const auto& c : corpus()) {
    if (!c.surface.cellular || c.emb.edges().size() > 8) continue;
    const MPolynomial l = las_vergnas_cellular(c.emb.rotation());
    CHECK(l == lv_oracle(c.emb.rotation()));
    CHECK(l == las_vergnas_embedded(c.emb));
    CHECK(at(l, {{Var::x, 2}, {Var::y, 2}}) == Rational(1 << c.emb.edges().size()));
    if (c.surface.euler_genus == 0) CHECK(l == tutte(c.emb.graph()));
  }
}

TEST_CASE("Bollobas-Riordan polynomial examples") {
  const RotationSystem edge = RotationSystem::ribbon(make_graph({{0, 0, 1}}), {{0, {{0, 0}}}, {1, {{0, 1}}}});
  CHECK(bollobas_riordan(edge) == x);
  CHECK(bollobas_riordan(named("plane-digon").rotation()) == (x - 1) + 2 + y);
  CHECK(bollobas_riordan(named("twisted-loop").rotation()) == 1 + y * z);
  CHECK(bollobas_riordan(named("theta-torus").rotation()).to_string() == "2 + 3y + y^2z^2 + x");
}

TEST_CASE("Krushkal polynomial examples") {
  const RotationSystem edge = RotationSystem::ribbon(make_graph({{0, 0, 1}}), {{0, {{0, 0}}}, {1, {{0, 1}}}});
  CHECK(krushkal(EmbeddedGraph::cellular(edge)) == x + 1);
  Multigraph lone;
  lone.add_vertex(0);
  CHECK(krushkal(EmbeddedGraph::cellular(RotationSystem::ribbon(lone, {}))) == MPolynomial(1));
  CHECK(krushkal(named("theta-torus")).to_string() == "3 + 3b + a + xb");
  CHECK(krushkal(named("torus-loop")).to_string() == "1 + b");
}

TEST_CASE("dichromatic polynomial examples") {
  Multigraph lone;
  lone.add_vertex(0);
  CHECK(dichromatic(lone) == x);
  CHECK(dichromatic(make_graph({{0, 0, 1}})) == x * x + x * y);
  CHECK(dichromatic(make_graph({{0, 0, 0}})) == x + x * y);
}

TEST_CASE("subset expansions sum to the number of subsets") {
  for (const auto& c : corpus()) {
    if (c.emb.edges().size() > 8) continue;
    const Rational subsets(1 << c.emb.edges().size());
    CHECK(at(las_vergnas_embedded(c.emb), {{Var::x, 2}, {Var::y, 2}}) == subsets);
    CHECK(at(dichromatic(c.emb.graph()), {}) == subsets);
    if (c.pinch) {
      CHECK_THROWS_AS(bollobas_riordan(c.emb.rotation()), DomainError);
      CHECK_THROWS_AS(krushkal(c.emb), DomainError);
      continue;
    }
    CHECK(at(bollobas_riordan(c.emb.rotation()), {{Var::x, 2}}) == subsets);
    CHECK(at(krushkal(c.emb), {}) == subsets);
  }
}

TEST_CASE("caps") {
  Multigraph g;
  g.add_vertex(0);
  for (int e = 0; e < 21; ++e) g.add_edge(e, 0, 0);
  CHECK_THROWS_AS(tutte(g), CapExceeded);
  CHECK_THROWS_AS(dichromatic(g, 5), CapExceeded);
  try {
    tutte(g);
  } catch (const CapExceeded& e) {
    CHECK(e.size() == 21);
    CHECK(e.cap() == 20);
  }
}
