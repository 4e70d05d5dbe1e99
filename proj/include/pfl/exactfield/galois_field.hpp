#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace pfl {

class GFElem;

/// GF(p^k) = F_p[u]/(modulus). Elements are encoded as integers whose base-p digits are the
/// coefficients of 1, u, u^2, ...; multiplication goes through discrete log tables.
class GaloisField : public std::enable_shared_from_this<GaloisField> {
 public:
  /// modulus: coefficients c0..ck (monic, degree k). Empty selects the first irreducible
  /// polynomial of degree k in lexicographic order.
  static std::shared_ptr<const GaloisField> create(uint32_t p, int k, std::vector<uint32_t> modulus = {});

  uint32_t characteristic() const { return p_; }
  int degree() const { return k_; }
  uint32_t order() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  GFElem zero() const;
  GFElem one() const;
  GFElem element(uint32_t code) const;
  /// The class of u, the adjoined root of the modulus (k > 1).
  GFElem generator_u() const;
  std::vector<GFElem> elements() const;

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;
  /// Absolute trace to F_p.
  uint32_t trace(uint32_t a) const;

  std::string name() const;

  static bool is_irreducible(uint32_t p, const std::vector<uint32_t>& poly);

 private:
  GaloisField(uint32_t p, int k, std::vector<uint32_t> modulus);
  uint32_t mul_slow(uint32_t a, uint32_t b) const;

  uint32_t p_;
  int k_;
  uint32_t q_;
  std::vector<uint32_t> modulus_;
  std::vector<uint32_t> log_;
  std::vector<uint32_t> exp_;
};

/// Value type for GF(p^k) elements. Carries its field handle.
class GFElem {
 public:
  GFElem() = default;
  GFElem(std::shared_ptr<const GaloisField> f, uint32_t v) : f_(std::move(f)), v_(v) {}

  uint32_t code() const { return v_; }
  const std::shared_ptr<const GaloisField>& field() const { return f_; }
  uint32_t characteristic() const { return f_->characteristic(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  GFElem zero_like() const { return {f_, 0}; }
  GFElem one_like() const { return {f_, 1}; }
  GFElem from_int(int64_t c) const;

  GFElem operator-() const { return {f_, f_->neg(v_)}; }
  GFElem operator+(const GFElem& o) const { return {f_, f_->add(v_, o.v_)}; }
  GFElem operator-(const GFElem& o) const { return {f_, f_->sub(v_, o.v_)}; }
  GFElem operator*(const GFElem& o) const { return {f_, f_->mul(v_, o.v_)}; }
  GFElem operator/(const GFElem& o) const;
  GFElem& operator+=(const GFElem& o) { return *this = *this + o; }
  GFElem& operator-=(const GFElem& o) { return *this = *this - o; }
  GFElem& operator*=(const GFElem& o) { return *this = *this * o; }
  GFElem inverse() const;
  GFElem pow(int64_t e) const;
  GFElem frobenius() const { return pow(characteristic()); }
  /// In characteristic 2 every element has a unique square root.
  GFElem sqrt() const;

  bool operator==(const GFElem& o) const { return v_ == o.v_; }
  bool operator!=(const GFElem& o) const { return v_ != o.v_; }

  std::string to_string() const;

 private:
  std::shared_ptr<const GaloisField> f_;
  uint32_t v_ = 0;
};

/// Inverse in a finite field; ZeroInverse on 0.
GFElem field_inverse(const GFElem& a);

}  // namespace pfl
