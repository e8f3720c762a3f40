#include <doctest.h>

#include <sstream>

#include "lvpoly/cli.hpp"

using namespace lvpoly;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(LVPOLY_FIXTURES) + "/" + name; }

}  // namespace

TEST_CASE("poly prints canonical text") {
  const Run lv = run({"poly", "--which", "lv", fixture("theta_torus.emb")});
  CHECK(lv.status == 0);
  CHECK(lv.out == "1 + 3z + 2z^2 + xz^2\n");
  CHECK(run({"poly", "--which", "tutte", fixture("theta_plane.emb")}).out == "y + y^2 + x\n");
  CHECK(run({"poly", "--which", "krushkal", fixture("theta_torus.emb")}).out == "3 + 3b + a + xb\n");
}

TEST_CASE("expansion and recursion print the same text") {
  for (const char* file : {"theta_torus.emb", "theta_plane.emb", "torus_loop.emb", "plane_digon.emb",
                           "twisted_loop.emb", "pinch_wedge.emb", "genus2_bouquet.emb"}) {
    for (const char* which : {"tutte", "lv-ext"}) {
      const Run e = run({"poly", "--which", which, "--method", "expansion", fixture(file)});
      const Run r = run({"poly", "--which", which, "--method", "recursion", fixture(file)});
      CHECK(e.status == 0);
      CHECK(e.out == r.out);
    }
  }
}

TEST_CASE("classify reports the torus loop") {
  const Run c = run({"classify", fixture("torus_loop.emb")});
  CHECK(c.status == 0);
  CHECK(c.out.find("edge 0: quasi-bridge (not bridge, not quasi-loop)\n") != std::string::npos);
}

TEST_CASE("identity suite on the plane digon") {
  const Run c = run({"identities", "--suite", "all", fixture("plane_digon.emb")});
  CHECK(c.status == 0);
  CHECK(c.out.find("FAIL") == std::string::npos);
  CHECK(c.out.find("RESULT: identities pass") != std::string::npos);
}

TEST_CASE("trace and validate") {
  const Run t = run({"trace", fixture("theta_torus.emb")});
  CHECK(t.out == "circles: 1\ncircle 0: 0.0> 1.1< 2.0> 0.1< 1.0> 2.1<\nRESULT: trace circles=1\n");
  const Run v = run({"validate", fixture("torus_loop.emb")});
  CHECK(v.status == 0);
  CHECK(v.out.find("euler genus: 2\n") != std::string::npos);
  CHECK(v.out.find("cellular: no\n") != std::string::npos);
}

TEST_CASE("states report") {
  const Run s = run({"states", fixture("genus2_bouquet.emb")});
  CHECK(s.status == 0);
  CHECK(s.out.find("minimum formula: misses at state") != std::string::npos);
}

TEST_CASE("errors") {
  CHECK(run({}).status == 2);
  CHECK(run({"--help"}).status == 0);
  CHECK(run({"poly", "--bogus", fixture("theta_torus.emb")}).status == 2);
  CHECK(run({"poly", "--which", "jones", fixture("theta_torus.emb")}).status == 2);
  CHECK(run({"poly", "--which", "br", "--method", "recursion", fixture("theta_torus.emb")}).status == 2);
  CHECK(run({"poly", "--which", "lv", fixture("torus_loop.emb")}).status == 2);
  CHECK(run({"poly", "--which", "br", fixture("pinch_wedge.emb")}).status == 2);
  const Run cap = run({"poly", "--cap", "2", fixture("theta_torus.emb")});
  CHECK(cap.status == 2);
  CHECK(cap.err.find("size 3 exceeds cap 2") != std::string::npos);
  const Run missing = run({"validate", fixture("missing.emb")});
  CHECK(missing.status == 2);
  CHECK_FALSE(missing.err.empty());
}
