#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "lvpoly/edge_set.hpp"
#include "lvpoly/embedding.hpp"
#include "lvpoly/errors.hpp"
#include "lvpoly/multigraph.hpp"

namespace lvpoly {

/// Rank evaluator. Implementations must be pure; they are shared between
/// matroids and their minors.
class RankOracle {
 public:
  virtual ~RankOracle() = default;
  virtual int rank(EdgeSet a) const = 0;
};

class RankMatroid {
 public:
  RankMatroid(EdgeSet ground, std::shared_ptr<const RankOracle> oracle);

  EdgeSet ground() const { return ground_; }
  int size() const { return ground_.size(); }
  /// r(A); throws InputError when A leaves the ground set.
  int rank(EdgeSet a) const;
  int rank() const { return full_rank_; }

  const std::shared_ptr<const RankOracle>& oracle() const { return oracle_; }

 private:
  EdgeSet ground_;
  std::shared_ptr<const RankOracle> oracle_;
  int full_rank_;
};

/// C(G): r(A) = v - c(A).
RankMatroid cycle_matroid(const Multigraph& g);
/// B(G) = C(G)*.
RankMatroid bond_matroid(const Multigraph& g);
/// r*(A) = |A| + r(E - A) - r(E).
RankMatroid dual(const RankMatroid& m);
RankMatroid delete_element(const RankMatroid& m, int e);
/// r'(A) = r(A + e) - r({e}).
RankMatroid contract_element(const RankMatroid& m, int e);

/// Free matroid on `ground` (every set independent).
RankMatroid free_matroid(EdgeSet ground);

bool is_loop(const RankMatroid& m, int e);
/// r(E) - r(E - e) = 1
bool is_isthmus(const RankMatroid& m, int e);
/// Minimal dependent set.
bool is_circuit(const RankMatroid& m, EdgeSet a);
bool is_flat(const RankMatroid& m, EdgeSet a);

/// Exhaustive check of r(empty) = 0, unit increase and local submodularity.
/// Returns a description of the first violation. Ground sets above
/// `cap` elements throw CapExceeded.
std::optional<std::string> check_axioms(const RankMatroid& m, int cap = 10);

/// True when the two matroids agree on every subset of the common ground.
bool same_rank_function(const RankMatroid& a, const RankMatroid& b);

struct PerspectiveWitness {
  EdgeSet a;
  int e;
};

class PerspectiveViolation : public DomainError {
 public:
  explicit PerspectiveViolation(PerspectiveWitness w);
  const PerspectiveWitness& witness() const { return witness_; }

 private:
  PerspectiveWitness witness_;
};

/// M -> M' with the identity identification of ground sets.
class MatroidPerspective {
 public:
  /// No validation; callers vouch for the rank increments.
  static MatroidPerspective unchecked(RankMatroid m, RankMatroid m_prime);

  const RankMatroid& m() const { return m_; }
  const RankMatroid& m_prime() const { return m_prime_; }
  EdgeSet ground() const { return m_.ground(); }

  MatroidPerspective delete_element(int e) const;
  MatroidPerspective contract_element(int e) const;

 private:
  MatroidPerspective(RankMatroid m, RankMatroid m_prime)
      : m_(std::move(m)), m_prime_(std::move(m_prime)) {}

  RankMatroid m_;
  RankMatroid m_prime_;
};

/// First (A, e) with e outside A and r(A+e) - r(A) < r'(A+e) - r'(A).
/// Exhaustive up to `exhaustive_cap` elements, seeded random samples above.
std::optional<PerspectiveWitness> find_perspective_violation(
    const RankMatroid& m, const RankMatroid& m_prime, int exhaustive_cap = 12,
    int samples = 4096, std::uint64_t seed = 1);

/// Validates and builds; throws PerspectiveViolation.
MatroidPerspective make_perspective(RankMatroid m, RankMatroid m_prime);

/// Each circuit of M is a union of circuits of M'. Exhaustive, |E| <= cap.
bool circuits_are_unions(const MatroidPerspective& mp, int cap = 8);
/// Each flat of M' is a flat of M. Exhaustive, |E| <= cap.
bool flats_are_flats(const MatroidPerspective& mp, int cap = 8);

/// (B(G-dagger), C(G)).
MatroidPerspective las_vergnas_perspective(const EmbeddingScheme& scheme);

}  // namespace lvpoly
