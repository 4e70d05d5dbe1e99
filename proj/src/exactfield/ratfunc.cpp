#include "pfl/exactfield/ratfunc.hpp"

#include "pfl/error.hpp"
#include "pfl/exactfield/prime_field.hpp"

namespace pfl {

RatFunc ratfunc_normalize(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  const uint32_t p = num.characteristic();
  const int n = num.nvars();
  RatFunc r;
  if (num.is_zero()) return RatFunc::constant(p, n, 0);
  Poly g = gcd(num, den);
  Poly nn = g.is_constant() ? num : num.divide_exact(g);
  Poly dd = g.is_constant() ? den : den.divide_exact(g);
  uint32_t lc = dd.leading().coeff;
  if (lc != 1) {
    uint32_t inv = modp::inv(lc, p);
    nn = nn.scaled(inv);
    dd = dd.scaled(inv);
  }
  return RatFunc(std::move(nn), std::move(dd));
}

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.characteristic(), num_.nvars(), 1)) {}

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  // Fast path: already reduced by construction in the normalizer.
  if (den.is_constant() && den.leading().coeff == 1) {
    num_ = std::move(num);
    den_ = std::move(den);
    return;
  }
  if (num.is_zero()) {
    num_ = std::move(num);
    den_ = Poly::constant(num_.characteristic(), num_.nvars(), 1);
    return;
  }
  Poly g = gcd(num, den);
  if (!g.is_constant()) {
    num = num.divide_exact(g);
    den = den.divide_exact(g);
  }
  uint32_t lc = den.leading().coeff;
  if (lc != 1) {
    uint32_t inv = modp::inv(lc, den.characteristic());
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RatFunc RatFunc::constant(uint32_t p, int nvars, int64_t c) { return RatFunc(Poly::constant(p, nvars, c)); }

RatFunc RatFunc::variable(uint32_t p, int nvars, int var) { return RatFunc(Poly::variable(p, nvars, var)); }

bool RatFunc::is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_term() == 1; }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  if (den_.is_constant()) return RatFunc(num_ * o.den_ + o.num_, o.den_);
  if (o.den_.is_constant()) return RatFunc(num_ + o.num_ * den_, den_);
  Poly g = gcd(den_, o.den_);
  if (g.is_constant()) return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  Poly a = den_.divide_exact(g), b = o.den_.divide_exact(g);
  return RatFunc(num_ * b + o.num_ * a, a * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return zero_like();
  if (is_polynomial() && o.is_polynomial()) return RatFunc(num_ * o.num_);
  // Cross-cancel: the factors are already reduced individually.
  Poly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  Poly n1 = g1.is_constant() ? num_ : num_.divide_exact(g1);
  Poly d2 = g1.is_constant() ? o.den_ : o.den_.divide_exact(g1);
  Poly n2 = g2.is_constant() ? o.num_ : o.num_.divide_exact(g2);
  Poly d1 = g2.is_constant() ? den_ : den_.divide_exact(g2);
  Poly nn = n1 * n2, dd = d1 * d2;
  RatFunc r;
  uint32_t lc = dd.leading().coeff;
  if (lc != 1) {
    uint32_t inv = modp::inv(lc, characteristic());
    nn = nn.scaled(inv);
    dd = dd.scaled(inv);
  }
  r.num_ = std::move(nn);
  r.den_ = std::move(dd);
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorKind::ZeroInverse, "inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero rational function");
  return *this * o.inverse();
}

RatFunc RatFunc::pow(int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  // Powers of reduced fractions stay reduced.
  RatFunc r;
  r.num_ = num_.pow(static_cast<uint64_t>(e));
  r.den_ = den_.pow(static_cast<uint64_t>(e));
  if (r.num_.is_zero()) return zero_like();
  return r;
}

RatFunc RatFunc::frobenius() const {
  RatFunc r;
  r.num_ = num_.frobenius();
  r.den_ = den_.frobenius();
  return r;
}

RatFunc RatFunc::partial(int var) const {
  Poly dn = num_.derivative(var);
  Poly dd = den_.derivative(var);
  if (dd.is_zero()) return RatFunc(dn, den_);
  return RatFunc(dn * den_ - num_ * dd, den_ * den_);
}

std::string RatFunc::to_string(const std::vector<std::string>& names) const {
  if (den_.is_constant()) return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

namespace {

bool poly_pth_root(const Poly& f, Poly* root) {
  const uint32_t p = f.characteristic();
  Poly r(p, f.nvars());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) {
      if (t.mono.e[i] % p) return false;
      m.e[i] = static_cast<uint16_t>(t.mono.e[i] / p);
    }
    r.push_unsorted(m, t.coeff);
  }
  r.canonicalize();
  *root = std::move(r);
  return true;
}

}  // namespace

bool ratfunc_sqrt(const RatFunc& f, RatFunc* root) {
  if (f.characteristic() != 2) throw Error(ErrorKind::WrongCharacteristic, "square roots need characteristic 2");
  Poly rn, rd;
  if (!poly_pth_root(f.num(), &rn) || !poly_pth_root(f.den(), &rd)) return false;
  if (root) *root = RatFunc(rn, rd);
  return true;
}

}  // namespace pfl
