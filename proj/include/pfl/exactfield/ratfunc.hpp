#pragma once

#include <string>
#include <vector>

#include "pfl/exactfield/poly.hpp"

namespace pfl {

/// Element of F_p(x1, ..., xm) in canonical reduced form: gcd(num, den) = 1, den monic
/// under grlex, zero stored as 0/1. Two equal rational functions compare equal structurally.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(Poly num);
  /// Normalizes; throws DivisionByZero when den = 0.
  RatFunc(Poly num, Poly den);

  static RatFunc constant(uint32_t p, int nvars, int64_t c);
  static RatFunc variable(uint32_t p, int nvars, int var);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  uint32_t characteristic() const { return num_.characteristic(); }
  int nvars() const { return num_.nvars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc zero_like() const { return constant(characteristic(), nvars(), 0); }
  RatFunc one_like() const { return constant(characteristic(), nvars(), 1); }
  RatFunc from_int(int64_t c) const { return constant(characteristic(), nvars(), c); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  RatFunc inverse() const;
  RatFunc pow(int64_t e) const;
  /// f^p.
  RatFunc frobenius() const;
  RatFunc partial(int var) const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  Poly num_;
  Poly den_;
};

/// Canonical reduced form of num/den.
RatFunc ratfunc_normalize(const Poly& num, const Poly& den);

/// In characteristic 2: true iff f is a square in F_2(x1..xm); sets *root.
bool ratfunc_sqrt(const RatFunc& f, RatFunc* root);

}  // namespace pfl
