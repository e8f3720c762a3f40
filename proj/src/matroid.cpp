#include "lvpoly/matroid.hpp"

#include <random>

namespace lvpoly {

namespace {

class GraphicOracle : public RankOracle {
 public:
  explicit GraphicOracle(Multigraph g) : g_(std::move(g)) {}
  int rank(EdgeSet a) const override { return lvpoly::rank(g_, a); }

 private:
  Multigraph g_;
};

class FreeOracle : public RankOracle {
 public:
  int rank(EdgeSet a) const override { return a.size(); }
};

class DualOracle : public RankOracle {
 public:
  DualOracle(std::shared_ptr<const RankOracle> base, EdgeSet ground)
      : base_(std::move(base)), ground_(ground), full_(base_->rank(ground)) {}
  int rank(EdgeSet a) const override { return a.size() + base_->rank(ground_ - a) - full_; }

 private:
  std::shared_ptr<const RankOracle> base_;
  EdgeSet ground_;
  int full_;
};

// Contraction of a whole set at once; nested contractions flatten into one.
class ContractOracle : public RankOracle {
 public:
  ContractOracle(std::shared_ptr<const RankOracle> base, EdgeSet contracted)
      : base_(std::move(base)), contracted_(contracted), offset_(base_->rank(contracted)) {}
  int rank(EdgeSet a) const override { return base_->rank(a | contracted_) - offset_; }

  const std::shared_ptr<const RankOracle>& base() const { return base_; }
  EdgeSet contracted() const { return contracted_; }

 private:
  std::shared_ptr<const RankOracle> base_;
  EdgeSet contracted_;
  int offset_;
};

void check_element(const RankMatroid& m, int e) {
  if (!m.ground().contains(e)) {
    throw InputError("element " + std::to_string(e) + " not in ground set " + m.ground().to_string());
  }
}

}  // namespace

RankMatroid::RankMatroid(EdgeSet ground, std::shared_ptr<const RankOracle> oracle)
    : ground_(ground), oracle_(std::move(oracle)), full_rank_(oracle_->rank(ground)) {}

int RankMatroid::rank(EdgeSet a) const {
  if (!a.is_subset_of(ground_)) {
    throw InputError("subset " + a.to_string() + " not in ground set " + ground_.to_string());
  }
  return oracle_->rank(a);
}

RankMatroid cycle_matroid(const Multigraph& g) {
  return RankMatroid(g.edges(), std::make_shared<GraphicOracle>(g));
}

RankMatroid bond_matroid(const Multigraph& g) { return dual(cycle_matroid(g)); }

RankMatroid dual(const RankMatroid& m) {
  return RankMatroid(m.ground(), std::make_shared<DualOracle>(m.oracle(), m.ground()));
}

RankMatroid delete_element(const RankMatroid& m, int e) {
  check_element(m, e);
  return RankMatroid(m.ground().without(e), m.oracle());
}

RankMatroid contract_element(const RankMatroid& m, int e) {
  check_element(m, e);
  const auto* inner = dynamic_cast<const ContractOracle*>(m.oracle().get());
  auto oracle = inner ? std::make_shared<ContractOracle>(inner->base(), inner->contracted().with(e))
                      : std::make_shared<ContractOracle>(m.oracle(), EdgeSet::of({e}));
  return RankMatroid(m.ground().without(e), std::move(oracle));
}

RankMatroid free_matroid(EdgeSet ground) {
  return RankMatroid(ground, std::make_shared<FreeOracle>());
}

bool is_loop(const RankMatroid& m, int e) {
  check_element(m, e);
  return m.rank(EdgeSet::of({e})) == 0;
}

bool is_isthmus(const RankMatroid& m, int e) {
  check_element(m, e);
  return m.rank() - m.rank(m.ground().without(e)) == 1;
}

bool is_circuit(const RankMatroid& m, EdgeSet a) {
  if (a.empty() || m.rank(a) != a.size() - 1) return false;
  for (int e : a) {
    if (m.rank(a.without(e)) != a.size() - 1) return false;
  }
  return true;
}

bool is_flat(const RankMatroid& m, EdgeSet a) {
  const int r = m.rank(a);
  for (int e : m.ground() - a) {
    if (m.rank(a.with(e)) != r + 1) return false;
  }
  return true;
}

std::optional<std::string> check_axioms(const RankMatroid& m, int cap) {
  if (m.size() > cap) throw CapExceeded("matroid axiom check", m.size(), cap);
  if (m.rank(EdgeSet{}) != 0) return "r(empty) != 0";
  std::optional<std::string> bad;
  for_each_subset(m.ground(), [&](EdgeSet a) {
    if (bad) return;
    const int r = m.rank(a);
    for (int e : m.ground() - a) {
      const int re = m.rank(a.with(e));
      if (re != r && re != r + 1) {
        bad = "unit increase fails at A=" + a.to_string() + " e=" + std::to_string(e);
        return;
      }
      if (re != r) continue;
      for (int f : m.ground() - a.with(e)) {
        if (f < e) continue;
        if (m.rank(a.with(f)) == r && m.rank(a.with(e).with(f)) != r) {
          bad = "local submodularity fails at A=" + a.to_string() + " e=" + std::to_string(e) +
                " f=" + std::to_string(f);
          return;
        }
      }
    }
  });
  return bad;
}

bool same_rank_function(const RankMatroid& a, const RankMatroid& b) {
  if (a.ground() != b.ground()) return false;
  bool same = true;
  for_each_subset(a.ground(), [&](EdgeSet s) { same = same && a.rank(s) == b.rank(s); });
  return same;
}

PerspectiveViolation::PerspectiveViolation(PerspectiveWitness w)
    : DomainError("not a matroid perspective: rank increments fail at A=" + w.a.to_string() +
                  " e=" + std::to_string(w.e)),
      witness_(w) {}

MatroidPerspective MatroidPerspective::unchecked(RankMatroid m, RankMatroid m_prime) {
  if (m.ground() != m_prime.ground()) {
    throw InputError("perspective ground sets differ: " + m.ground().to_string() + " vs " +
                     m_prime.ground().to_string());
  }
  return MatroidPerspective(std::move(m), std::move(m_prime));
}

MatroidPerspective MatroidPerspective::delete_element(int e) const {
  return MatroidPerspective(lvpoly::delete_element(m_, e), lvpoly::delete_element(m_prime_, e));
}

MatroidPerspective MatroidPerspective::contract_element(int e) const {
  return MatroidPerspective(lvpoly::contract_element(m_, e), lvpoly::contract_element(m_prime_, e));
}

std::optional<PerspectiveWitness> find_perspective_violation(const RankMatroid& m,
                                                             const RankMatroid& m_prime,
                                                             int exhaustive_cap, int samples,
                                                             std::uint64_t seed) {
  if (m.ground() != m_prime.ground()) {
    throw InputError("perspective ground sets differ: " + m.ground().to_string() + " vs " +
                     m_prime.ground().to_string());
  }
  auto step_fails = [&](EdgeSet a, int e) {
    return m.rank(a.with(e)) - m.rank(a) < m_prime.rank(a.with(e)) - m_prime.rank(a);
  };
  std::optional<PerspectiveWitness> found;
  if (m.size() <= exhaustive_cap) {
    for_each_subset(m.ground(), [&](EdgeSet a) {
      if (found) return;
      for (int e : m.ground() - a) {
        if (step_fails(a, e)) {
          found = PerspectiveWitness{a, e};
          return;
        }
      }
    });
    return found;
  }
  std::mt19937_64 rng(seed);
  const std::vector<int> ids = m.ground().ids();
  for (int i = 0; i < samples; ++i) {
    const std::uint64_t bits = rng() & m.ground().bits();
    const EdgeSet a(bits);
    const EdgeSet outside = m.ground() - a;
    if (outside.empty()) continue;
    const std::vector<int> out = outside.ids();
    const int e = out[rng() % out.size()];
    if (step_fails(a, e)) return PerspectiveWitness{a, e};
  }
  return std::nullopt;
}

MatroidPerspective make_perspective(RankMatroid m, RankMatroid m_prime) {
  if (auto w = find_perspective_violation(m, m_prime)) throw PerspectiveViolation(*w);
  return MatroidPerspective::unchecked(std::move(m), std::move(m_prime));
}

bool circuits_are_unions(const MatroidPerspective& mp, int cap) {
  const EdgeSet ground = mp.ground();
  if (ground.size() > cap) throw CapExceeded("circuit union check", ground.size(), cap);
  std::vector<EdgeSet> circuits_prime;
  for_each_subset(ground, [&](EdgeSet a) {
    if (is_circuit(mp.m_prime(), a)) circuits_prime.push_back(a);
  });
  bool ok = true;
  for_each_subset(ground, [&](EdgeSet c) {
    if (!ok || !is_circuit(mp.m(), c)) return;
    EdgeSet covered;
    for (EdgeSet d : circuits_prime) {
      if (d.is_subset_of(c)) covered = covered | d;
    }
    ok = covered == c;
  });
  return ok;
}

bool flats_are_flats(const MatroidPerspective& mp, int cap) {
  const EdgeSet ground = mp.ground();
  if (ground.size() > cap) throw CapExceeded("flat check", ground.size(), cap);
  bool ok = true;
  for_each_subset(ground, [&](EdgeSet a) {
    if (ok && is_flat(mp.m_prime(), a)) ok = is_flat(mp.m(), a);
  });
  return ok;
}

MatroidPerspective las_vergnas_perspective(const EmbeddingScheme& scheme) {
  return MatroidPerspective::unchecked(bond_matroid(scheme.dagger), cycle_matroid(scheme.graph));
}

}  // namespace lvpoly
