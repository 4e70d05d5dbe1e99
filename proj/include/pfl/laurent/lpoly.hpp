#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfl/exactfield/ratfunc.hpp"

namespace pfl {

/// Laurent polynomial over F_2 in up to 8 variables. Each monomial is packed into 64 bits, one
/// biased byte per exponent with the outermost variable in the highest byte, so unsigned key order
/// is the lexicographic valuation order (outermost variable first).
struct LPoly {
  static constexpr int kBias = 128;
  static constexpr int kMaxExponent = 60;  // inputs stay within this so products never overflow a byte
  static constexpr uint64_t kOne = 0x8080808080808080ULL;

  std::vector<uint64_t> terms;  // sorted, distinct

  static uint64_t pack(const std::vector<int>& e);
  static std::vector<int> unpack(uint64_t key, int m);
  static LPoly monomial(const std::vector<int>& e) { return LPoly{{pack(e)}}; }
  static LPoly one() { return LPoly{{kOne}}; }

  bool is_zero() const { return terms.empty(); }
  bool operator==(const LPoly&) const = default;

  LPoly operator+(const LPoly& o) const;
  LPoly operator*(const LPoly& o) const;
  LPoly square() const;
  /// Largest |exponent| over all monomials and variables.
  int max_abs_exponent() const;
  std::string to_string(int m) const;
};

/// Multiplication of packed monomials (no overflow check).
inline uint64_t mono_mul(uint64_t a, uint64_t b) { return a + b - LPoly::kOne; }

/// Nullopt unless f (t-coordinates) has a monomial denominator.
std::optional<LPoly> to_lpoly(const RatFunc& f, int m);
RatFunc from_lpoly(const LPoly& f, int m);

/// Canonical representative of the Artin-Schreier class: monomials of positive valuation vanish,
/// all-even monomials of negative valuation are halved until odd, what remains is the constant 1
/// and odd monomials of negative valuation. Zero exactly for elements of the image.
LPoly wp_reduce(const LPoly& f, int m);

/// Finds lambda, a sum of monomials with exponents in [-window, window]^m, such that
/// target + lambda^2 * scale lies in the Artin-Schreier image. GF(2) elimination on reduced classes.
std::optional<LPoly> solve_square_shift(const LPoly& target, const LPoly& scale, int m, int window);
/// Several shifts at once: target + sum_i lambda_i^2 * scales[i] in the image.
std::optional<std::vector<LPoly>> solve_square_shifts(const LPoly& target, const std::vector<LPoly>& scales, int m,
                                                      int window);
/// General additive version: target + sum_i (lambda_i^2 * scales[i] + lambda_i * linear[i]) in the image.
std::optional<std::vector<LPoly>> solve_additive_shifts(const LPoly& target, const std::vector<LPoly>& scales,
                                                        const std::vector<LPoly>& linear, int m, int window);

}  // namespace pfl
