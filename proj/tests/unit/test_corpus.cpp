#include <doctest.h>

#include <set>

#include "corpus.hpp"

using namespace lvpoly;
using lvpoly::testing::corpus;

TEST_CASE("corpus covers the required mix") {
  const auto& all = corpus();
  CHECK(all.size() >= 200);
  std::set<std::string> names;
  int cellular = 0, noncellular = 0, pinch = 0, nonorientable = 0;
  std::set<int> genera;
  for (const auto& c : all) {
    CHECK(names.insert(c.name).second);
    CHECK(c.emb.edges().size() <= 10);
    CHECK(components(c.emb.graph(), c.emb.edges()) == 1);
    cellular += c.surface.cellular;
    noncellular += !c.surface.cellular && !c.pinch;
    pinch += c.pinch;
    nonorientable += !c.orientable;
    if (!c.pinch) genera.insert(c.surface.euler_genus);
    if (!c.pinch) CHECK(c.surface.euler_genus <= 3);
  }
  CHECK(cellular >= 100);
  CHECK(noncellular >= 30);
  CHECK(pinch >= 20);
  CHECK(nonorientable >= 40);
  CHECK(genera == std::set<int>{0, 1, 2, 3});
}

TEST_CASE("corpus is deterministic") {
  const auto& a = corpus();
  const auto b = lvpoly::testing::named_examples();
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(a[i].name == b[i].name);
}
