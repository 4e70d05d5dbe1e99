#pragma once

#include "pfl/exactfield/poly.hpp"

namespace pfl::detail {

/// Dense-recursive evaluation/interpolation gcd over an extension of F_p. Returns false when
/// the evaluation points run out; the caller then falls back to the pseudo-remainder sequence.
bool modular_gcd(const Poly& a, const Poly& b, Poly* out);

}  // namespace pfl::detail
