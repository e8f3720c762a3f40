#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lvpoly/embedding.hpp"

namespace lvpoly {

enum class CheckStatus { pass, fail, skipped };

const char* to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;  // point count, skip reason, or failure witness
};

struct CheckReport {
  std::vector<CheckResult> results;

  bool all_passed() const;
  int count(CheckStatus s) const;
  const CheckResult* find(const std::string& name) const;
};

struct IdentityOptions {
  int points = 8;
  std::uint64_t seed = 0x5eed;
  int cap = 16;
  int state_cap = 10;  // largest e(G) for the 3^e all-states sweep
};

/// Checks every polynomial identity that applies to `emb`:
///
///   LtoT                (y-1)^g L(x, y, 1/(y-1)) = T_G(x, y)            cellular
///   tidyL               (z(y-1))^g L(x, y, 1/(z^2(y-1))) = genus sum     cellular
///   specializations     T_{M->M}, z = x-1 and z = 1/(y-1) reductions
///   dichromatic-form    L as a sum over c_G(A), c_{G*}(A^c), |A|          cellular
///   dichromatic-tutte   Z_G = (x/y)^c y^v T_G((x+y)/y, y+1)
///   R-from-K            R = y^{g/2} K(x-1, y, yz^2, 1/y)                 cellular
///   L-from-K            L = z^{g/2} K(x-1, y-1, 1/z, z)                  cellular
///   L-from-K-general    L = z^{(g(N(E)) - g(S-E))/2} K(x-1, y-1, 1/z, z)  surfaces
///   R-from-L            R(x, y, 1) = y^g L(x, y+1, 1/y)                  cellular
///   cellular-extended   cellular L equals the pseudo-surface L            cellular
///   expansion-recursion subset sums equal deletion-contraction
///
/// Each is evaluated exactly at `points` seeded rational points that avoid
/// poles; identities between honest polynomials are also compared
/// symbolically. Throws CapExceeded above `cap` edges.
CheckReport verify_identities(const EmbeddedGraph& emb, const IdentityOptions& options = {});

/// Medial-state checks for a connected cellular embedding:
///
///   states-all          f(G^{tau(C)} - B) equals the traced curve count, all 3^e states
///   states-noncrossing  crossing-free: f(W) = 2c(W) - g(W) + |W| - v, and the
///                       rank form of the minimum equals the genus form
///   noncrossing-genfunct  sum f_k t^k = t R_G(t+1, t, 1/t)
///   min-formula         minimum formula is exact (sphere, torus, projective plane)
///   quasi-tree-duality  every A: G - A quasi-tree iff G* - A^c is, genus sum,
///                       and the spanning tree dichotomy on low genus
///   lr-relation         L and R one-variable relation (sphere, torus, projective plane)
///
/// Other inputs get every check skipped with the reason.
CheckReport verify_state_identities(const EmbeddedGraph& emb, const IdentityOptions& options = {});

}  // namespace lvpoly
