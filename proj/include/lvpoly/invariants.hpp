#pragma once

#include "lvpoly/embedding.hpp"
#include "lvpoly/matroid.hpp"
#include "lvpoly/multigraph.hpp"
#include "lvpoly/polynomial.hpp"
#include "lvpoly/ribbon.hpp"

namespace lvpoly {

enum class Method { expansion, recursion };

inline constexpr int kDefaultExpansionCap = 20;

/// T_M(x, y) by subset expansion.
MPolynomial tutte(const RankMatroid& m, int cap = kDefaultExpansionCap);
/// T_G = T_{C(G)}.
MPolynomial tutte(const Multigraph& g, int cap = kDefaultExpansionCap);

/// T_{M->M'}(x, y, z). The recursion always removes the largest element.
MPolynomial tutte_perspective(const MatroidPerspective& mp, Method method = Method::expansion,
                              int cap = kDefaultExpansionCap);

/// L_G of a ribbon graph, summed from genus data of G and its dual.
MPolynomial las_vergnas_cellular(const RotationSystem& r, int cap = kDefaultExpansionCap);

/// L_{G in Sigma}; the recursion is the quasi-bridge/quasi-loop
/// deletion-contraction on (G, G-dagger).
MPolynomial las_vergnas_embedded(const EmbeddingScheme& scheme, Method method = Method::expansion,
                                 int cap = kDefaultExpansionCap);
MPolynomial las_vergnas_embedded(const EmbeddedGraph& emb, Method method = Method::expansion,
                                 int cap = kDefaultExpansionCap);

/// R_G(x, y, z) without the orientability variable.
MPolynomial bollobas_riordan(const RotationSystem& r, int cap = kDefaultExpansionCap);

/// K(x, y, a, b); a and b carry half-integer exponents. Surfaces only.
MPolynomial krushkal(const EmbeddedGraph& emb, int cap = kDefaultExpansionCap);

/// Z_G(x, y) = sum x^c(A) y^|A|.
MPolynomial dichromatic(const Multigraph& g, int cap = kDefaultExpansionCap);

}  // namespace lvpoly
