#pragma once

#include <concepts>
#include <span>

#include "pfl/exactfield/galois_field.hpp"
#include "pfl/exactfield/ratfunc.hpp"

namespace pfl {

/// Exact field element with value semantics; the element carries its own field handle so
/// that zero/one of the same field can be produced from any element.
template <class F>
concept FieldElement = std::copyable<F> && requires(const F a, const F b, int64_t n) {
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { a / b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.zero_like() } -> std::same_as<F>;
  { a.one_like() } -> std::same_as<F>;
  { a.from_int(n) } -> std::same_as<F>;
  { a.inverse() } -> std::same_as<F>;
  { a.pow(n) } -> std::same_as<F>;
  { a.characteristic() } -> std::convertible_to<uint32_t>;
};

static_assert(FieldElement<GFElem>);
static_assert(FieldElement<RatFunc>);

/// Square root in characteristic 2; false when the element is not a square.
inline bool try_sqrt(const GFElem& a, GFElem* root) {
  if (root) *root = a.sqrt();
  return true;
}
inline bool try_sqrt(const RatFunc& a, RatFunc* root) { return ratfunc_sqrt(a, root); }

/// Evaluates a polynomial over F_p at a point of GF(p^k).
GFElem evaluate(const Poly& f, std::span<const GFElem> point);
/// Evaluates a rational function; throws DivisionByZero when the denominator vanishes.
GFElem evaluate(const RatFunc& f, std::span<const GFElem> point);

}  // namespace pfl
