#include <doctest.h>

#include "corpus.hpp"
#include "lvpoly/embedding_io.hpp"

using namespace lvpoly;
using lvpoly::testing::corpus;

namespace {

int parse_error_line(const std::string& text) {
  try {
    parse_embedded_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("text round trip over the corpus") {
  for (const auto& c : corpus()) {
    const std::string text = to_text(c.emb);
    const EmbeddedGraph back = parse_embedded_graph(text);
    CHECK(to_text(back) == text);
    CHECK(back.graph() == c.emb.graph());
    CHECK(back.regions().size() == c.emb.regions().size());
    const SurfaceReport rep = validate(back);
    CHECK(rep.euler_genus == c.surface.euler_genus);
    CHECK(rep.cellular == c.surface.cellular);
  }
}

TEST_CASE("fixture files") {
  const EmbeddedGraph theta = read_embedded_graph_file(LVPOLY_FIXTURES "/theta_torus.emb");
  CHECK(theta.circles().count() == 1);
  CHECK(validate(theta).euler_genus == 2);

  const EmbeddedGraph annulus = read_embedded_graph_file(LVPOLY_FIXTURES "/torus_loop.emb");
  CHECK_FALSE(validate(annulus).cellular);
  CHECK(annulus.regions().size() == 1);

  const EmbeddedGraph wedge = read_embedded_graph_file(LVPOLY_FIXTURES "/pinch_wedge.emb");
  CHECK(wedge.rotation().has_pinch());
  CHECK(validate(wedge).euler_genus == -1);

  CHECK_THROWS_AS(read_embedded_graph_file(LVPOLY_FIXTURES "/no_such_file.emb"), InputError);
}

TEST_CASE("signs default to plus and comments are ignored") {
  const EmbeddedGraph g = parse_embedded_graph(
      "# one loop\n"
      "vertex 0: sector (0.0 0.1)   # the only vertex\n"
      "\n"
      "edge 0: 0 0\n"
      "cellular\n");
  CHECK(g.rotation().sign(0) == 1);
  CHECK(g.circles().count() == 2);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_error_line("vertex 0: sector (0.0 0.1\nedge 0: 0 0\ncellular\n") == 1);
  CHECK(parse_error_line("vertex 0: sector (0.0 0.1)\nedge 0: 0 0 sign *\ncellular\n") == 2);
  CHECK(parse_error_line("vertex 0: sector (0.0 0.1)\nedge 0: 0 0\nfaces 2\n") == 3);
  CHECK(parse_error_line("vertex 0: sector (0.0 0.1)\nedge 0: 0 0\n") == 2);
  CHECK(parse_error_line("vertex 0: sector (0.0 0.1)\nedge 0: 0 0\ncellular\nregion 0: genus 0 circles 0,1\n") == 4);
  CHECK(parse_error_line("vertex 0: sector (0.0 0.2)\nedge 0: 0 0\ncellular\n") == 1);
  CHECK(parse_error_line("vertex 0: sector (0.0 0.1)\nvertex 0: sector ()\nedge 0: 0 0\ncellular\n") == 2);
  CHECK_THROWS_AS(parse_embedded_graph("vertex 0: sector (0.0)\nedge 0: 0 0\ncellular\n"), InputError);
}
