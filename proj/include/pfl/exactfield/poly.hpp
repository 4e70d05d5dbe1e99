#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace pfl {

inline constexpr int kMaxVars = 8;

/// Exponent vector x1^e1 ... xm^em. Unused slots stay zero.
struct Monomial {
  std::array<uint16_t, kMaxVars> e{};

  int total_degree() const {
    int d = 0;
    for (auto v : e) d += v;
    return d;
  }
  bool divides(const Monomial& other) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > other.e[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires o.divides(*this)
  bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic order, x1 < x2 < ... < xm (the last variable is most significant).
int grlex_compare(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  uint32_t coeff;  // nonzero residue mod p
};

/// Sparse multivariate polynomial over F_p. Terms are kept sorted by decreasing grlex
/// order with nonzero coefficients, so structural equality is polynomial equality.
class Poly {
 public:
  Poly() = default;
  Poly(uint32_t p, int nvars);

  static Poly constant(uint32_t p, int nvars, int64_t c);
  static Poly variable(uint32_t p, int nvars, int var);  // var is 0-based
  static Poly monomial(uint32_t p, int nvars, const Monomial& m, uint32_t c = 1);

  uint32_t characteristic() const { return p_; }
  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& leading() const { return terms_.front(); }
  uint32_t constant_term() const;
  int degree_in(int var) const;
  int min_degree_in(int var) const;
  int total_degree() const;
  /// Index of the highest variable that occurs, or -1 for constants.
  int main_variable() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(uint32_t c) const;
  Poly times_monomial(const Monomial& m, uint32_t c = 1) const;
  Poly pow(uint64_t e) const;
  /// f^p, computed termwise (coefficients are fixed by Frobenius on F_p).
  Poly frobenius() const;
  Poly derivative(int var) const;
  /// Scale so that the leading coefficient is 1; zero stays zero.
  Poly monic() const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Coefficients of this polynomial viewed in F_p[other vars][x_var], index = power.
  std::vector<Poly> coefficients_in(int var) const;
  static Poly from_coefficients(const std::vector<Poly>& coeffs, int var, uint32_t p, int nvars);

  /// Exact division; throws if `d` does not divide this polynomial.
  Poly divide_exact(const Poly& d) const;
  /// Returns true and sets quotient when `d` divides this polynomial.
  bool try_divide(const Poly& d, Poly* quotient) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

  void push_unsorted(const Monomial& m, uint32_t c) { terms_.push_back({m, c}); }
  void canonicalize();

 private:
  uint32_t p_ = 2;
  int nvars_ = 0;
  std::vector<Term> terms_;
};

/// Monic greatest common divisor via recursive content / primitive-part reduction
/// over the highest variable (primitive pseudo-remainder sequences).
Poly gcd(const Poly& a, const Poly& b);

std::string default_var_name(int i);

}  // namespace pfl
