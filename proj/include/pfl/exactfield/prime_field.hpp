#pragma once

#include <cstdint>

#include "pfl/error.hpp"

namespace pfl {

/// Residue arithmetic modulo a small prime. Residues are kept in [0, p).
namespace modp {

inline bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline uint32_t add(uint32_t a, uint32_t b, uint32_t p) {
  uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline uint32_t sub(uint32_t a, uint32_t b, uint32_t p) { return a >= b ? a - b : a + p - b; }
inline uint32_t neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }
inline uint32_t mul(uint32_t a, uint32_t b, uint32_t p) {
  return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}

inline uint32_t pow(uint32_t a, uint64_t e, uint32_t p) {
  uint32_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

inline uint32_t inv(uint32_t a, uint32_t p) {
  if (a % p == 0) throw Error(ErrorKind::ZeroInverse, "inverse of 0 mod p");
  return pow(a, p - 2, p);
}

inline uint32_t reduce(int64_t a, uint32_t p) {
  int64_t r = a % static_cast<int64_t>(p);
  return static_cast<uint32_t>(r < 0 ? r + p : r);
}

/// Binomial coefficient C(n, k) mod p by Lucas' theorem.
inline uint32_t binomial(uint32_t n, uint32_t k, uint32_t p) {
  if (k > n) return 0;
  uint32_t result = 1;
  while (n || k) {
    uint32_t ni = n % p, ki = k % p;
    if (ki > ni) return 0;
    uint32_t num = 1, den = 1;
    for (uint32_t i = 0; i < ki; ++i) {
      num = mul(num, ni - i, p);
      den = mul(den, i + 1, p);
    }
    result = mul(result, mul(num, inv(den, p), p), p);
    n /= p;
    k /= p;
  }
  return result;
}

}  // namespace modp
}  // namespace pfl
