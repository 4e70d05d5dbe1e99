#pragma once

#include <memory>
#include <vector>

#include "pfl/exactfield/prime_field.hpp"
#include "pfl/quadform/forms.hpp"

namespace pfl {

template <FieldElement E>
struct SymbolAlgebraData {
  uint32_t p;
  E alpha;
  E gamma;
  // table[(i * p + j) * p + k] = x^i (x + j)^k reduced to degree < p, as coefficients of 1..x^{p-1}.
  std::vector<std::vector<E>> table;
};

/// Element sum c_{ij} x^i y^j of [alpha, gamma)_{p,F}, coefficients row-major in (i, j).
template <FieldElement E>
struct AlgElement {
  std::shared_ptr<const SymbolAlgebraData<E>> alg;
  std::vector<E> coeffs;

  const E& at(int i, int j) const { return coeffs[i * alg->p + j]; }
  E& at(int i, int j) { return coeffs[i * alg->p + j]; }
  bool is_zero() const {
    for (const auto& c : coeffs)
      if (!c.is_zero()) return false;
    return true;
  }
  bool operator==(const AlgElement& o) const { return alg == o.alg && coeffs == o.coeffs; }
};

/// [alpha, gamma)_{p,F} = F<x, y : x^p - x = alpha, y^p = gamma, y x y^{-1} = x + 1>.
template <FieldElement E>
class SymbolAlgebra {
 public:
  using Element = AlgElement<E>;

  SymbolAlgebra(E alpha, E gamma) {
    if (gamma.is_zero()) throw Error(ErrorKind::ZeroArgument, "Kummer slot must be nonzero");
    const uint32_t p = alpha.characteristic();
    if (p > 13) throw Error(ErrorKind::InvalidArgument, "symbol algebras are supported for p <= 13");
    auto d = std::make_shared<SymbolAlgebraData<E>>(SymbolAlgebraData<E>{p, alpha, gamma, {}});
    const E zero = alpha.zero_like(), one = alpha.one_like();
    // x^e for e < 2p - 1, reduced with x^p = x + alpha.
    std::vector<std::vector<E>> xpow(2 * p - 1, std::vector<E>(p, zero));
    for (uint32_t e = 0; e < 2 * p - 1; ++e) {
      if (e < p) {
        xpow[e][e] = one;
        continue;
      }
      const auto& prev = xpow[e - 1];  // x^e = x * x^{e-1}
      std::vector<E> r(p, zero);
      for (uint32_t m = 0; m + 1 < p; ++m) r[m + 1] = r[m + 1] + prev[m];
      r[1] = r[1] + prev[p - 1];
      r[0] = r[0] + alpha * prev[p - 1];
      xpow[e] = r;
    }
    d->table.assign(p * p * p, std::vector<E>(p, zero));
    for (uint32_t i = 0; i < p; ++i)
      for (uint32_t j = 0; j < p; ++j)
        for (uint32_t k = 0; k < p; ++k) {
          auto& out = d->table[(i * p + j) * p + k];
          for (uint32_t m = 0; m <= k; ++m) {
            // C(k, m) j^{k-m} x^{i+m}
            uint32_t c = modp::mul(modp::binomial(k, m, p), modp::pow(j, k - m, p), p);
            if (!c) continue;
            E ce = alpha.from_int(c);
            for (uint32_t t = 0; t < p; ++t) out[t] = out[t] + ce * xpow[i + m][t];
          }
        }
    data_ = d;
  }

  uint32_t p() const { return data_->p; }
  const E& alpha() const { return data_->alpha; }
  const E& gamma() const { return data_->gamma; }
  const std::shared_ptr<const SymbolAlgebraData<E>>& data() const { return data_; }

  Element zero() const { return {data_, std::vector<E>(p() * p(), alpha().zero_like())}; }
  Element scalar(const E& c) const {
    Element r = zero();
    r.at(0, 0) = c;
    return r;
  }
  Element one() const { return scalar(alpha().one_like()); }
  Element monomial(int i, int j, const E& c) const {
    Element r = zero();
    r.at(i, j) = c;
    return r;
  }
  Element x() const { return monomial(1, 0, alpha().one_like()); }
  Element y() const { return monomial(0, 1, alpha().one_like()); }

  Element add(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element r = a;
    for (size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] = r.coeffs[k] + b.coeffs[k];
    return r;
  }
  Element sub(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element r = a;
    for (size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] = r.coeffs[k] - b.coeffs[k];
    return r;
  }
  Element scale(const Element& a, const E& c) const {
    check(a);
    Element r = a;
    for (auto& v : r.coeffs) v = v * c;
    return r;
  }

  /// (x^i y^j)(x^k y^l) = x^i (x + j)^k y^{j+l}, with y^p = gamma.
  Element mul(const Element& a, const Element& b) const {
    check(a);
    check(b);
    const uint32_t P = p();
    Element r = zero();
    for (uint32_t i = 0; i < P; ++i)
      for (uint32_t j = 0; j < P; ++j) {
        const E& ca = a.at(i, j);
        if (ca.is_zero()) continue;
        for (uint32_t k = 0; k < P; ++k)
          for (uint32_t l = 0; l < P; ++l) {
            const E& cb = b.at(k, l);
            if (cb.is_zero()) continue;
            E c = ca * cb;
            uint32_t jl = j + l;
            if (jl >= P) {
              c = c * gamma();
              jl -= P;
            }
            const auto& poly = data_->table[(i * P + j) * P + k];
            for (uint32_t m = 0; m < P; ++m)
              if (!poly[m].is_zero()) r.at(m, jl) = r.at(m, jl) + c * poly[m];
          }
      }
    return r;
  }

  Element power(const Element& a, uint64_t e) const {
    Element r = one(), b = a;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  Element pth_power_minus_self(const Element& a) const { return sub(power(a, p()), a); }

 private:
  void check(const Element& a) const {
    if (a.alg != data_) throw Error(ErrorKind::AlgebraMismatch, "element belongs to a different symbol algebra");
  }

  std::shared_ptr<const SymbolAlgebraData<E>> data_;
};

/// <<gamma, alpha]] for the quaternion algebra [alpha, gamma)_{2,F}.
template <FieldElement E>
PfisterQuad<E> quaternion_norm_form(const SymbolAlgebra<E>& alg) {
  if (alg.p() != 2) throw Error(ErrorKind::WrongCharacteristic, "norm form needs p = 2");
  return PfisterQuad<E>({alg.gamma()}, alg.alpha());
}

/// Outcome of the common-slot check: the element w = x + t y + x y with t = alpha + (alpha - beta)/gamma.
template <FieldElement E>
struct CommonSlotReport {
  E t;
  E slot;  // t^p gamma + beta
  bool element_identity = false;
  bool closed_form = false;
  bool degenerate = false;  // slot == 0
  /// F[x] with x^p - x = slot is etale: T^p - T - slot has derivative -1, so it is separable for
  /// every slot. Whether it is a field is not decided here.
  bool etale = true;
  bool holds() const { return element_identity && closed_form; }
};

template <FieldElement E>
CommonSlotReport<E> commonslot_check(const E& alpha, const E& beta, const E& gamma) {
  SymbolAlgebra<E> alg(alpha, gamma);
  const int64_t p = alg.p();
  const E t = alpha + (alpha - beta) / gamma;
  const E slot = t.pow(p) * gamma + beta;
  auto w = alg.add(alg.add(alg.x(), alg.scale(alg.y(), t)), alg.mul(alg.x(), alg.y()));
  CommonSlotReport<E> r{t, slot};
  r.element_identity = alg.pth_power_minus_self(w) == alg.scalar(slot);
  const E g1p = gamma.pow(1 - p);
  r.closed_form = slot == gamma * alpha.pow(p) + g1p * alpha.pow(p) - g1p * beta.pow(p) + beta;
  r.degenerate = slot.is_zero();
  return r;
}

/// The check over F_p(alpha, beta, gamma) with independent transcendentals.
inline bool commonslot_verify(uint32_t p) {
  if (!modp::is_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be prime");
  return commonslot_check(RatFunc::variable(p, 3, 0), RatFunc::variable(p, 3, 1), RatFunc::variable(p, 3, 2)).holds();
}

}  // namespace pfl
