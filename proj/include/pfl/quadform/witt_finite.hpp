#pragma once

#include <vector>

#include "pfl/quadform/general_quad.hpp"

namespace pfl {

template <FieldElement E>
struct HyperbolicPair {
  Vec<E> u;  // q(u) = 0
  Vec<E> w;  // q(w) = 0, B(u, w) = 1
};

/// phi = witt_index * H _|_ anisotropic_part _|_ defect * <0>_q. Witness vectors are given in the
/// coordinates of the decomposed form.
template <FieldElement E>
struct WittDecomposition {
  int witt_index = 0;
  QForm<E> anisotropic_part;
  int defect = 0;
  std::vector<HyperbolicPair<E>> hyperbolic_witnesses;
  std::vector<Vec<E>> defect_witnesses;
  /// Basis of the anisotropic part, matching its block/quasi coordinates.
  std::vector<Vec<E>> anisotropic_basis;

  explicit WittDecomposition(E one) : anisotropic_part(one) {}
};

/// Constructive Witt decomposition over GF(2^k). `pivot_order` permutes the coordinate basis
/// before reduction; any order gives an isometric result.
WittDecomposition<GFElem> witt_decompose(const QForm<GFElem>& phi, std::vector<int> pivot_order = {});
/// Infinite base fields go through the Laurent model instead.
WittDecomposition<RatFunc> witt_decompose(const QForm<RatFunc>& phi, std::vector<int> pivot_order = {});

/// Arf invariant sum a_i b_i and its class in F / wp(F), which over GF(2^k) is the absolute trace.
struct ArfInvariant {
  GFElem value;
  int klass = 0;
};
ArfInvariant arf_invariant(const QForm<GFElem>& phi);

/// Solves z^2 + z = c over GF(2^k); false when c is not in wp(F).
bool solve_artin_schreier(const GFElem& c, GFElem* z);

/// Isometry class over a finite field: dimension, Witt index, defect and, for the anisotropic
/// part, its dimension and Arf class or quasilinear rank.
bool isometric_finite(const QForm<GFElem>& a, const QForm<GFElem>& b);

// ---------------------------------------------------------------------------
// Exhaustive oracle

struct IsotropicSubspace {
  int dimension = 0;
  std::vector<Vec<GFElem>> basis;
};

/// Largest totally isotropic subspace by exhaustive search over normalized echelon bases.
/// Limited to forms with at most 2^20 vectors. The returned basis is the first maximal one in
/// lexicographic search order, identical for both implementations.
IsotropicSubspace max_isotropic_subspace_serial(const QForm<GFElem>& phi);
IsotropicSubspace max_isotropic_subspace_parallel(const QForm<GFElem>& phi);

/// Dimension of the isotropic part of the radical, by enumeration.
int radical_defect_oracle(const QForm<GFElem>& phi);

/// Witt index from the oracle: i_0 - i_d.
int witt_index_oracle(const QForm<GFElem>& phi, bool parallel = true);

// ---------------------------------------------------------------------------

struct QuadFactorVerdict {
  bool is_factor = false;
  int witt_index = 0;
  int threshold = 0;
  /// Decomposition of phi _|_ psi; its hyperbolic witnesses span the common subform.
  std::vector<HyperbolicPair<GFElem>> witnesses;
};

/// psi (fold m) is a factor of phi (fold n >= m) iff i_W(phi _|_ psi) >= 2^m.
QuadFactorVerdict is_quad_factor(const PfisterQuad<GFElem>& psi, const PfisterQuad<GFElem>& phi);

}  // namespace pfl
