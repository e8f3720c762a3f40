#include "lvpoly/identities.hpp"

#include <functional>
#include <optional>
#include <sstream>
#include <map>
#include <random>

#include "lvpoly/errors.hpp"
#include "lvpoly/invariants.hpp"
#include "lvpoly/matroid.hpp"
#include "lvpoly/polynomial.hpp"
#include "lvpoly/states.hpp"

namespace lvpoly {

namespace {

struct Sample {
  Rational lhs;
  Rational rhs;
  std::string where;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // Small nonzero rationals; callers reject poles by throwing DomainError.
  Rational next() {
    long long num = static_cast<long long>(rng_() % 61) - 30;
    if (num == 0) num = 31;
    const long long den = static_cast<long long>(rng_() % 7) + 1;
    return Rational(num) / den;
  }

 private:
  std::mt19937_64 rng_;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Rational inv(const Rational& q) {
  if (q == 0) throw DomainError("pole");
  return 1 / q;
}

Rational rpow(const Rational& q, int n) {
  if (n < 0) return rpow(inv(q), -n);
  Rational out = 1;
  for (int i = 0; i < n; ++i) out *= q;
  return out;
}

std::string str(const Rational& q) {
  std::ostringstream out;
  out << q;
  return out.str();
}

const MPolynomial& X() {
  static const MPolynomial v = MPolynomial::var(Var::x);
  return v;
}
const MPolynomial& Y() {
  static const MPolynomial v = MPolynomial::var(Var::y);
  return v;
}

class Suite {
 public:
  explicit Suite(const IdentityOptions& o) : options_(o) {}

  void skip(const std::string& name, const std::string& why) {
    report_.results.push_back({name, CheckStatus::skipped, why});
  }

  void fail(const std::string& name, const std::string& why) {
    report_.results.push_back({name, CheckStatus::fail, why});
  }

  void pass(const std::string& name, const std::string& detail) {
    report_.results.push_back({name, CheckStatus::pass, detail});
  }

  /// Runs `sample` at the configured number of pole-free points; `symbolic`
  /// carries a failed symbolic comparison, if any.
  void run(const std::string& name, const std::function<Sample(Sampler&)>& sample,
           std::optional<std::string> symbolic_failure = std::nullopt, bool symbolic_done = false) {
    if (symbolic_failure) {
      fail(name, "symbolic: " + *symbolic_failure);
      return;
    }
    Sampler sampler(options_.seed ^ fnv1a(name));
    int done = 0;
    int attempts = 0;
    while (done < options_.points) {
      if (++attempts > 64 * options_.points + 64) {
        fail(name, "only " + std::to_string(done) + " pole-free points found");
        return;
      }
      Sample s;
      try {
        s = sample(sampler);
      } catch (const DomainError&) {
        continue;
      }
      if (s.lhs != s.rhs) {
        fail(name, "at " + s.where + ": lhs=" + str(s.lhs) + " rhs=" + str(s.rhs));
        return;
      }
      ++done;
    }
    report_.results.push_back(
        {name, CheckStatus::pass, (symbolic_done ? "symbolic, " : "") + std::to_string(done) + " points"});
  }

  CheckReport take() { return std::move(report_); }

 private:
  IdentityOptions options_;
  CheckReport report_;
};

std::optional<std::string> compare(const MPolynomial& lhs, const MPolynomial& rhs) {
  if (lhs == rhs) return std::nullopt;
  return "lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
}

using ExponentCounts = std::map<std::array<int, 3>, long long>;

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

bool CheckReport::all_passed() const { return count(CheckStatus::fail) == 0; }

int CheckReport::count(CheckStatus s) const {
  int n = 0;
  for (const auto& r : results) n += r.status == s;
  return n;
}

const CheckResult* CheckReport::find(const std::string& name) const {
  for (const auto& r : results) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

CheckReport verify_identities(const EmbeddedGraph& emb, const IdentityOptions& options) {
  const int n_edges = emb.edges().size();
  if (n_edges > options.cap) throw CapExceeded("identity suite", n_edges, options.cap);

  Suite suite(options);
  const SurfaceReport surface = validate(emb);
  const RotationSystem& r = emb.rotation();
  const Multigraph& g = emb.graph();
  const EdgeSet edges = emb.edges();
  const EmbeddingScheme scheme = derive_dagger(emb);
  const MPolynomial l_ext = las_vergnas_embedded(scheme, Method::expansion, n_edges);
  const MPolynomial t_g = tutte(g, n_edges);
  const MatroidPerspective mp = las_vergnas_perspective(scheme);
  const MPolynomial t_mp = tutte_perspective(mp, Method::expansion, n_edges);
  const bool surface_only = !r.has_pinch();
  const std::string not_cellular = "embedding is not cellular";

  // Subset sums against recursion.
  {
    const MPolynomial l_rec = las_vergnas_embedded(scheme, Method::recursion, n_edges);
    const MPolynomial t_rec = tutte_perspective(mp, Method::recursion, n_edges);
    std::optional<std::string> bad = compare(l_ext, l_rec);
    if (!bad) bad = compare(t_mp, t_rec);
    if (bad) {
      suite.fail("expansion-recursion", *bad);
    } else {
      suite.run("expansion-recursion", [&](Sampler& s) {
        Point p;
        p.set(Var::x, s.next());
        p.set(Var::y, s.next());
        p.set(Var::z, s.next());
        return Sample{l_ext.evaluate(p), l_rec.evaluate(p), p.to_string()};
      }, std::nullopt, true);
    }
  }

  // Specializations of the perspective polynomial, M = B(G-dagger), M' = C(G).
  {
    const RankMatroid& m = mp.m();
    const RankMatroid& mq = mp.m_prime();
    const MPolynomial t_m = tutte(m, n_edges);
    const int drop = m.rank() - mq.rank();
    std::optional<std::string> bad =
        compare(tutte_perspective(MatroidPerspective::unchecked(m, m), Method::expansion, n_edges), t_m);
    if (!bad) bad = compare(tutte_perspective(MatroidPerspective::unchecked(mq, mq), Method::expansion, n_edges), t_g);
    if (!bad) bad = compare(t_mp.substitute(Var::z, X() - MPolynomial(1)), t_m);
    if (!bad && drop >= 0) bad = compare(t_mp.substitute_reciprocal(Var::z, Y() - MPolynomial(1), drop), t_g);
    suite.run("specializations", [&](Sampler& s) {
      const Rational x = s.next(), y = s.next();
      Point p;
      p.set(Var::x, x);
      p.set(Var::y, y);
      p.set(Var::z, inv(y - 1));
      Point q;
      q.set(Var::x, x);
      q.set(Var::y, y);
      return Sample{t_g.evaluate(q), rpow(y - 1, drop) * t_mp.evaluate(p), q.to_string()};
    }, bad, true);
  }

  // Z_G = (x/y)^c(G) y^v(G) T_G((x+y)/y, y+1)
  {
    const MPolynomial z_g = dichromatic(g, n_edges);
    const int c = components(g, edges);
    const int v = g.num_vertices();
    suite.run("dichromatic-tutte", [&](Sampler& s) {
      const Rational x = s.next(), y = s.next();
      Point p;
      p.set(Var::x, x);
      p.set(Var::y, y);
      Point q;
      q.set(Var::x, (x + y) * inv(y));
      q.set(Var::y, y + 1);
      return Sample{z_g.evaluate(p), rpow(x * inv(y), c) * rpow(y, v) * t_g.evaluate(q), p.to_string()};
    });
  }

  if (surface_only) {
    const MPolynomial k = krushkal(emb, n_edges);
    const int gamma_n = euler_genus(r, edges);
    const int gamma_c = complement_stats(emb, edges, surface).gamma_complement;
    suite.run("L-from-K-general", [&](Sampler& s) {
      const Rational x = s.next(), y = s.next(), w = s.next();
      Point p;
      p.set(Var::x, x);
      p.set(Var::y, y);
      p.set(Var::z, w * w);
      Point q;
      q.set(Var::x, x - 1);
      q.set(Var::y, y - 1);
      q.set_square(Var::a, inv(w));
      q.set_square(Var::b, w);
      return Sample{l_ext.evaluate(p), rpow(w, gamma_n - gamma_c) * k.evaluate(q), p.to_string()};
    });
  } else {
    suite.skip("L-from-K-general", "pinch vertex present");
  }

  static const char* kCellularChecks[] = {"LtoT",     "tidyL",    "dichromatic-form",  "R-from-K",
                                          "L-from-K", "R-from-L", "cellular-extended"};
  if (!surface.cellular) {
    for (const char* name : kCellularChecks) suite.skip(name, not_cellular);
    return suite.take();
  }

  const MPolynomial l = las_vergnas_cellular(r, n_edges);
  const MPolynomial br = bollobas_riordan(r, n_edges);
  const MPolynomial k = krushkal(emb, n_edges);
  const RotationSystem d = dual(r);
  const int gamma = euler_genus(r);

  suite.run("LtoT", [&](Sampler& s) {
    const Rational x = s.next(), y = s.next();
    Point p;
    p.set(Var::x, x);
    p.set(Var::y, y);
    p.set(Var::z, inv(y - 1));
    Point q;
    q.set(Var::x, x);
    q.set(Var::y, y);
    return Sample{rpow(y - 1, gamma) * l.evaluate(p), t_g.evaluate(q), q.to_string()};
  }, compare(l.substitute_reciprocal(Var::z, Y() - MPolynomial(1), gamma), t_g), true);

  {
    ExponentCounts tidy;
    const int full_rank = rank(g, edges);
    for_each_subset(edges, [&](EdgeSet a) {
      ++tidy[{full_rank - rank(g, a), nullity(g, a), euler_genus(r, a) - euler_genus(d, edges - a)}];
    });
    suite.run("tidyL", [&](Sampler& s) {
      const Rational x = s.next(), y = s.next(), z = s.next();
      Point p;
      p.set(Var::x, x);
      p.set(Var::y, y);
      p.set(Var::z, inv(z * z * (y - 1)));
      Rational rhs = 0;
      for (const auto& [e, n] : tidy) rhs += n * rpow(x - 1, e[0]) * rpow(y - 1, e[1]) * rpow(z, e[2]);
      return Sample{rpow(z * (y - 1), gamma) * l.evaluate(p), rhs,
                    "x=" + str(x) + ", y=" + str(y) + ", z=" + str(z)};
    });
  }

  {
    ExponentCounts dich;
    for_each_subset(edges, [&](EdgeSet a) {
      ++dich[{components(g, a), components(d.graph(), edges - a), a.size()}];
    });
    const int c = components(g, edges);
    const int n_dual = nullity(d.graph(), edges);
    suite.run("dichromatic-form", [&](Sampler& s) {
      const Rational x = s.next(), y = s.next(), z = s.next();
      Point p;
      p.set(Var::x, x);
      p.set(Var::y, y);
      p.set(Var::z, z);
      Rational sum = 0;
      for (const auto& [e, n] : dich) {
        sum += n * rpow((x - 1) * inv(z), e[0]) * rpow((y - 1) * z, e[1]) * rpow(inv(z), e[2]);
      }
      return Sample{l.evaluate(p), rpow(inv((x - 1) * (y - 1)), c) * rpow(z, n_dual) * sum, p.to_string()};
    });
  }

  suite.run("R-from-K", [&](Sampler& s) {
    const Rational x = s.next(), w = s.next(), z = s.next();
    Point p;
    p.set(Var::x, x);
    p.set(Var::y, w * w);
    p.set(Var::z, z);
    Point q;
    q.set(Var::x, x - 1);
    q.set_square(Var::y, w);
    q.set_square(Var::a, w * z);
    q.set_square(Var::b, inv(w));
    return Sample{br.evaluate(p), rpow(w, gamma) * k.evaluate(q), p.to_string()};
  });

  suite.run("L-from-K", [&](Sampler& s) {
    const Rational x = s.next(), y = s.next(), w = s.next();
    Point p;
    p.set(Var::x, x);
    p.set(Var::y, y);
    p.set(Var::z, w * w);
    Point q;
    q.set(Var::x, x - 1);
    q.set(Var::y, y - 1);
    q.set_square(Var::a, inv(w));
    q.set_square(Var::b, w);
    return Sample{l.evaluate(p), rpow(w, gamma) * k.evaluate(q), p.to_string()};
  });

  suite.run("R-from-L", [&](Sampler& s) {
    const Rational x = s.next(), y = s.next();
    Point p;
    p.set(Var::x, x);
    p.set(Var::y, y);
    p.set(Var::z, 1);
    Point q;
    q.set(Var::x, x);
    q.set(Var::y, y + 1);
    q.set(Var::z, inv(y));
    return Sample{br.evaluate(p), rpow(y, gamma) * l.evaluate(q), "x=" + str(x) + ", y=" + str(y)};
  }, compare(br.substitute(Var::z, 1),
             l.substitute(Var::y, Y() + MPolynomial(1)).substitute_reciprocal(Var::z, Y(), gamma)), true);

  suite.run("cellular-extended", [&](Sampler& s) {
    Point p;
    p.set(Var::x, s.next());
    p.set(Var::y, s.next());
    p.set(Var::z, s.next());
    return Sample{l.evaluate(p), l_ext.evaluate(p), p.to_string()};
  }, compare(l, l_ext), true);

  return suite.take();
}

CheckReport verify_state_identities(const EmbeddedGraph& emb, const IdentityOptions& options) {
  Suite suite(options);
  static const char* kNames[] = {"states-all",  "states-noncrossing", "noncrossing-genfunct",
                                 "min-formula", "quasi-tree-duality", "lr-relation"};
  const RotationSystem& g = emb.rotation();
  std::string unusable;
  if (!validate(emb).cellular) {
    unusable = "embedding is not cellular";
  } else if (components(emb.graph(), emb.edges()) != 1) {
    unusable = "graph is not connected";
  }
  if (!unusable.empty()) {
    for (const char* name : kNames) suite.skip(name, unusable);
    return suite.take();
  }
  const int n_edges = g.edges().size();
  if (n_edges > options.cap) throw CapExceeded("state suite", n_edges, options.cap);
  const RotationSystem d = dual(g);

  if (n_edges > options.state_cap) {
    suite.skip("states-all", "3^" + std::to_string(n_edges) + " states above the state cap");
  } else {
    const Medial m = medial(g);
    std::optional<std::string> bad;
    long long n = 0;
    for_each_state(g.edges(), [&](const GraphState& s) {
      ++n;
      if (bad) return;
      const int a = state_components(g, s);
      const int b = traced_state_components(m, s);
      if (a != b) {
        bad = "state " + s.to_string() + ": ribbon count " + std::to_string(a) + ", traced " + std::to_string(b);
      }
    });
    if (bad) {
      suite.fail("states-all", *bad);
    } else {
      suite.pass("states-all", std::to_string(n) + " states");
    }
  }

  const SurfaceType type = surface_type(g);
  const bool low_genus =
      type == SurfaceType::sphere || type == SurfaceType::torus || type == SurfaceType::projective_plane;
  {
    std::optional<std::string> bad;
    std::optional<std::string> min_bad;
    long long n = 0;
    for_each_noncrossing_state(g.edges(), [&](const GraphState& s) {
      ++n;
      const ComponentFormula f = lv_component_formula(g, d, s);
      if (!bad && (f.our_formula != f.true_count || f.rank_form != f.min_form)) {
        bad = "state " + s.to_string() + ": count " + std::to_string(f.true_count) + ", formula " +
              std::to_string(f.our_formula) + ", minimum " + std::to_string(f.min_form) + ", rank form " +
              std::to_string(f.rank_form);
      }
      if (!min_bad && !f.agrees) {
        min_bad = "state " + s.to_string() + ": count " + std::to_string(f.true_count) + ", minimum " +
                  std::to_string(f.min_form);
      }
    });
    if (bad) {
      suite.fail("states-noncrossing", *bad);
    } else {
      suite.pass("states-noncrossing", std::to_string(n) + " states");
    }
    if (!low_genus) {
      suite.skip("min-formula", std::string("surface is ") + to_string(type) +
                                    (min_bad ? "; formula misses at " + *min_bad : "; formula holds anyway"));
    } else if (min_bad) {
      suite.fail("min-formula", *min_bad);
    } else {
      suite.pass("min-formula", std::string(to_string(type)) + ", " + std::to_string(n) + " states");
    }
  }

  {
    const Laurent profile = profile_polynomial(noncrossing_profile(g, options.cap));
    const Laurent gf = noncrossing_generating_function(g, options.cap);
    if (profile == gf) {
      suite.pass("noncrossing-genfunct", profile.to_string());
    } else {
      suite.fail("noncrossing-genfunct", "profile " + profile.to_string() + ", t R(t+1, t, 1/t) = " + gf.to_string());
    }
  }

  {
    std::optional<std::string> bad;
    int quasi_trees = 0;
    for_each_subset(g.edges(), [&](EdgeSet a) {
      const QuasiTreeReport q = quasi_tree_duality(g, d, a);
      quasi_trees += q.primal_quasi_tree;
      if (!bad && !q.ok()) {
        bad = "A=" + a.to_string() + ": primal " + std::to_string(q.primal_quasi_tree) + ", dual " +
              std::to_string(q.dual_quasi_tree) + ", genus sum " + (q.genus_identity ? "ok" : "wrong") +
              ", tree dichotomy " + (q.tree_dichotomy.value_or(true) ? "ok" : "wrong");
      }
    });
    if (bad) {
      suite.fail("quasi-tree-duality", *bad);
    } else {
      suite.pass("quasi-tree-duality", std::to_string(quasi_trees) + " quasi-trees" +
                                           (low_genus ? ", tree dichotomy checked" : ""));
    }
  }

  if (!low_genus) {
    suite.skip("lr-relation", std::string("surface is ") + to_string(type));
  } else {
    const LrRelation lr = lr_relation(g, options.cap);
    if (lr.holds()) {
      suite.pass("lr-relation", std::string(to_string(type)) + ": " + lr.lhs.to_string());
    } else {
      suite.fail("lr-relation", "L side " + lr.lhs.to_string() + ", R side " + lr.rhs.to_string());
    }
  }
  return suite.take();
}

}  // namespace lvpoly
