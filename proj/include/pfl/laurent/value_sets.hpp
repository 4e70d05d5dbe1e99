#pragma once

#include <vector>

#include "pfl/laurent/laurent_ctx.hpp"
#include "pfl/quadform/forms.hpp"

namespace pfl {

// Value sets of quasilinear forms <d_1, ..., d_r>_q over F_2((x1))...((xm)). The nonzero values are
// the K^2-span of the d_i minus zero, so every question here is linear algebra over K^2. K^2-linear
// relations among rational functions are already visible over F_2(x)^2 because x1..xm form a 2-basis
// of both fields; the answers therefore do not depend on the orientation of the tower.

/// Dimension of the K^2-span of `values`.
int square_span_rank(const std::vector<RatFunc>& values);

/// True iff the two lists span the same K^2-subspace, i.e. the quasilinear forms have the same
/// value set.
bool same_value_set(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b);

/// beta is a nonzero value of Q(B) (only the diagonal of B matters in characteristic 2).
bool represented_by(const BForm<RatFunc>& B, const RatFunc& beta);

/// Q(B) anisotropic: the diagonal entries are K^2-independent.
bool quasilinear_anisotropic(const BForm<RatFunc>& B);

}  // namespace pfl
