#include "lvpoly/invariants.hpp"

#include <map>
#include <stdexcept>

namespace lvpoly {

namespace {

// Subset sums collapse to counts per exponent vector before any polynomial
// arithmetic happens. Shifted variables stand for (v - 1).
class Accumulator {
 public:
  using Key = std::array<int, kNumVars>;  // half units

  void add(const Key& key) {
    for (int h : key) {
      if (h < 0) throw std::logic_error("negative exponent in subset expansion");
    }
    ++counts_[key];
  }
  void add_count(const Key& key, long long n) { counts_[key] += n; }

  MPolynomial expand(std::array<bool, kNumVars> shifted) const {
    std::array<std::vector<MPolynomial>, kNumVars> powers;
    MPolynomial out;
    for (const auto& [key, count] : counts_) {
      Monomial plain;
      MPolynomial factor(count);
      for (int i = 0; i < kNumVars; ++i) {
        if (!shifted[i]) {
          plain.half[i] = key[i];
          continue;
        }
        if (key[i] % 2 != 0) throw std::logic_error("half exponent on a shifted variable");
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(MPolynomial(1));
        while (static_cast<int>(cache.size()) <= key[i] / 2) {
          cache.push_back(cache.back() * (MPolynomial::var(static_cast<Var>(i)) - MPolynomial(1)));
        }
        factor *= cache[key[i] / 2];
      }
      out += factor * MPolynomial::term(plain, 1);
    }
    return out;
  }

 private:
  std::map<Key, long long> counts_;
};

constexpr int X = 0;
constexpr int Y = 1;
constexpr int Z = 2;

void check_cap(const char* what, int size, int cap) {
  if (size > cap) throw CapExceeded(what, size, cap);
}

int halve_exact(int twice, const char* what) {
  if (twice % 2 != 0) throw std::logic_error(std::string("odd numerator in ") + what);
  return twice / 2;
}

void perspective_recursion(const MatroidPerspective& mp, Accumulator::Key key, Accumulator& acc) {
  const EdgeSet ground = mp.ground();
  if (ground.empty()) {
    acc.add(key);
    return;
  }
  const int e = ground.max_id();
  if (is_isthmus(mp.m_prime(), e)) {
    key[X] += 2;
    perspective_recursion(mp.delete_element(e), key, acc);
  } else if (is_loop(mp.m(), e)) {
    key[Y] += 2;
    perspective_recursion(mp.delete_element(e), key, acc);
  } else if (is_isthmus(mp.m(), e)) {
    Accumulator::Key with_z = key;
    with_z[Z] += 2;
    perspective_recursion(mp.delete_element(e), with_z, acc);
    perspective_recursion(mp.contract_element(e), key, acc);
  } else {
    perspective_recursion(mp.delete_element(e), key, acc);
    perspective_recursion(mp.contract_element(e), key, acc);
  }
}

void scheme_recursion(const EmbeddingScheme& scheme, Accumulator::Key key, Accumulator& acc) {
  const EdgeSet edges = scheme.edges();
  if (edges.empty()) {
    acc.add(key);
    return;
  }
  const int e = edges.max_id();
  const EdgeClass c = classify_edge(scheme, e);
  if (c.bridge) {
    key[X] += 2;
    scheme_recursion(delete_edge(scheme, e), key, acc);
  } else if (c.quasi_loop) {
    key[Y] += 2;
    scheme_recursion(delete_edge(scheme, e), key, acc);
  } else if (c.quasi_bridge) {
    Accumulator::Key with_z = key;
    with_z[Z] += 2;
    scheme_recursion(delete_edge(scheme, e), with_z, acc);
    scheme_recursion(contract_edge(scheme, e), key, acc);
  } else {
    scheme_recursion(delete_edge(scheme, e), key, acc);
    scheme_recursion(contract_edge(scheme, e), key, acc);
  }
}

void require_ribbon(const RotationSystem& r, const char* what) {
  if (r.has_pinch()) throw DomainError(std::string(what) + ": needs a ribbon graph (pinch vertex present)");
}

}  // namespace

MPolynomial tutte(const RankMatroid& m, int cap) {
  check_cap("Tutte expansion", m.size(), cap);
  Accumulator acc;
  const int full = m.rank();
  for_each_subset(m.ground(), [&](EdgeSet s) {
    const int r = m.rank(s);
    acc.add({2 * (full - r), 2 * (s.size() - r), 0, 0, 0, 0});
  });
  return acc.expand({true, true, false, false, false, false});
}

MPolynomial tutte(const Multigraph& g, int cap) { return tutte(cycle_matroid(g), cap); }

MPolynomial tutte_perspective(const MatroidPerspective& mp, Method method, int cap) {
  check_cap("perspective Tutte polynomial", mp.ground().size(), cap);
  Accumulator acc;
  if (method == Method::recursion) {
    perspective_recursion(mp, {}, acc);
    return acc.expand({false, false, false, false, false, false});
  }
  const RankMatroid& m = mp.m();
  const RankMatroid& mq = mp.m_prime();
  const int full = m.rank();
  const int full_q = mq.rank();
  for_each_subset(mp.ground(), [&](EdgeSet s) {
    const int r = m.rank(s);
    const int rq = mq.rank(s);
    acc.add({2 * (full_q - rq), 2 * (s.size() - r), 2 * ((full - r) - (full_q - rq)), 0, 0, 0});
  });
  return acc.expand({true, true, false, false, false, false});
}

MPolynomial las_vergnas_cellular(const RotationSystem& r, int cap) {
  require_ribbon(r, "las_vergnas_cellular");
  check_cap("cellular Las Vergnas expansion", r.edges().size(), cap);
  const RotationSystem d = dual(r);
  const Multigraph& g = r.graph();
  const EdgeSet edges = r.edges();
  const int gamma = euler_genus(r);
  const int full_rank = rank(g, edges);
  Accumulator acc;
  for_each_subset(edges, [&](EdgeSet s) {
    const int rs = rank(g, s);
    const int ga = euler_genus(r, s);
    const int gd = euler_genus(d, edges - s);
    const int zexp = halve_exact(gamma - ga + gd, "cellular z exponent");
    const int yexp = (s.size() - rs) - halve_exact(gamma + ga - gd, "cellular y exponent");
    acc.add({2 * (full_rank - rs), 2 * yexp, 2 * zexp, 0, 0, 0});
  });
  return acc.expand({true, true, false, false, false, false});
}

MPolynomial las_vergnas_embedded(const EmbeddingScheme& scheme, Method method, int cap) {
  check_cap("Las Vergnas polynomial", scheme.edges().size(), cap);
  Accumulator acc;
  if (method == Method::recursion) {
    scheme_recursion(scheme, {}, acc);
    return acc.expand({false, false, false, false, false, false});
  }
  const EdgeSet edges = scheme.edges();
  const int c_full = components(scheme.graph, edges);
  const int rho_empty = rho(scheme, EdgeSet{});
  const int rho_full = rho(scheme, edges);
  for_each_subset(edges, [&](EdgeSet s) {
    const int cs = components(scheme.graph, s);
    const int rs = rho(scheme, s);
    acc.add({2 * (cs - c_full), 2 * (rs - rho_empty),
             2 * (edges.size() - s.size() - rho_full + rs + c_full - cs), 0, 0, 0});
  });
  return acc.expand({true, true, false, false, false, false});
}

MPolynomial las_vergnas_embedded(const EmbeddedGraph& emb, Method method, int cap) {
  return las_vergnas_embedded(derive_dagger(emb), method, cap);
}

MPolynomial bollobas_riordan(const RotationSystem& r, int cap) {
  require_ribbon(r, "bollobas_riordan");
  check_cap("Bollobas-Riordan expansion", r.edges().size(), cap);
  const Multigraph& g = r.graph();
  const int c_full = components(g, r.edges());
  Accumulator acc;
  for_each_subset(r.edges(), [&](EdgeSet s) {
    const int cs = components(g, s);
    acc.add({2 * (cs - c_full), 2 * nullity(g, s), 2 * euler_genus(r, s), 0, 0, 0});
  });
  return acc.expand({true, false, false, false, false, false});
}

MPolynomial krushkal(const EmbeddedGraph& emb, int cap) {
  if (emb.rotation().has_pinch()) throw DomainError("krushkal: defined for graphs in surfaces only (pinch vertex present)");
  check_cap("Krushkal expansion", emb.edges().size(), cap);
  const SurfaceReport surface = validate(emb);
  const Multigraph& g = emb.graph();
  const int c_full = components(g, emb.edges());
  Accumulator acc;
  for_each_subset(emb.edges(), [&](EdgeSet s) {
    const ComplementStats st = complement_stats(emb, s, surface);
    acc.add({2 * (components(g, s) - c_full), 2 * (st.k_complement - surface.components), 0,
             st.gamma_neighborhood, st.gamma_complement, 0});
  });
  return acc.expand({false, false, false, false, false, false});
}

MPolynomial dichromatic(const Multigraph& g, int cap) {
  check_cap("dichromatic expansion", g.num_edges(), cap);
  Accumulator acc;
  for_each_subset(g.edges(), [&](EdgeSet s) { acc.add({2 * components(g, s), 2 * s.size(), 0, 0, 0, 0}); });
  return acc.expand({false, false, false, false, false, false});
}

}  // namespace lvpoly
