#include <doctest.h>

#include "corpus.hpp"
#include "lvpoly/errors.hpp"
#include "lvpoly/identities.hpp"

using namespace lvpoly;
using lvpoly::testing::corpus;

namespace {

const EmbeddedGraph& named(const std::string& name) {
  for (const auto& c : corpus()) {
    if (c.name == name) return c.emb;
  }
  throw std::out_of_range(name);
}

}  // namespace

TEST_CASE("theta on the torus passes every polynomial identity") {
  const CheckReport rep = verify_identities(named("theta-torus"));
  CHECK(rep.all_passed());
  CHECK(rep.count(CheckStatus::skipped) == 0);
  for (const char* name : {"LtoT", "tidyL", "specializations", "dichromatic-form", "dichromatic-tutte", "R-from-K",
                           "L-from-K", "L-from-K-general", "R-from-L", "cellular-extended", "expansion-recursion"}) {
    const CheckResult* r = rep.find(name);
    REQUIRE(r != nullptr);
    CHECK(r->status == CheckStatus::pass);
  }
}

TEST_CASE("cellular-only identities are gated") {
  const CheckReport annulus = verify_identities(named("torus-loop"));
  CHECK(annulus.all_passed());
  CHECK(annulus.find("L-from-K-general")->status == CheckStatus::pass);
  CHECK(annulus.find("LtoT")->status == CheckStatus::skipped);
  CHECK(annulus.find("R-from-K")->status == CheckStatus::skipped);

  for (const auto& c : corpus()) {
    if (!c.pinch) continue;
    const CheckReport rep = verify_identities(c.emb);
    CHECK(rep.all_passed());
    CHECK(rep.find("L-from-K-general")->status == CheckStatus::skipped);
    CHECK(rep.find("expansion-recursion")->status == CheckStatus::pass);
    break;
  }
}

TEST_CASE("identity suite over part of the corpus") {
  int n = 0;
  for (const auto& c : corpus()) {
    if (n++ % 4 != 0) continue;
    const CheckReport rep = verify_identities(c.emb);
    for (const CheckResult& r : rep.results) {
      INFO(c.name << " " << r.name << " " << r.detail);
      CHECK(r.status != CheckStatus::fail);
    }
  }
}

TEST_CASE("sampling is reproducible") {
  IdentityOptions opts;
  opts.seed = 99;
  const CheckReport a = verify_identities(named("theta-plane"), opts);
  const CheckReport b = verify_identities(named("theta-plane"), opts);
  REQUIRE(a.results.size() == b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) CHECK(a.results[i].detail == b.results[i].detail);
}

TEST_CASE("state suite on small embeddings") {
  const CheckReport theta = verify_state_identities(named("theta-torus"));
  CHECK(theta.all_passed());
  CHECK(theta.count(CheckStatus::skipped) == 0);

  const CheckReport annulus = verify_state_identities(named("torus-loop"));
  CHECK(annulus.count(CheckStatus::skipped) == static_cast<int>(annulus.results.size()));
}

TEST_CASE("identity caps") {
  IdentityOptions opts;
  opts.cap = 2;
  CHECK_THROWS_AS(verify_identities(named("theta-torus"), opts), CapExceeded);
}
