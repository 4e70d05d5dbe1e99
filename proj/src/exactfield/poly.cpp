#include "pfl/exactfield/poly.hpp"

#include <algorithm>
#include <sstream>

#include "pfl/error.hpp"
#include "pfl/exactfield/prime_field.hpp"
#include "modular_gcd.hpp"

namespace pfl {

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    uint32_t s = uint32_t(e[i]) + o.e[i];
    if (s > 0xFFFF) throw Error(ErrorKind::DegreeOverflow, "monomial exponent exceeds 65535");
    r.e[i] = static_cast<uint16_t>(s);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint16_t>(e[i] - o.e[i]);
  return r;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

std::string default_var_name(int i) { return "x" + std::to_string(i + 1); }

Poly::Poly(uint32_t p, int nvars) : p_(p), nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars)
    throw Error(ErrorKind::InvalidArgument, "variable count must be in [0, 8]");
}

Poly Poly::constant(uint32_t p, int nvars, int64_t c) {
  Poly r(p, nvars);
  uint32_t v = modp::reduce(c, p);
  if (v) r.terms_.push_back({Monomial{}, v});
  return r;
}

Poly Poly::variable(uint32_t p, int nvars, int var) {
  if (var < 0 || var >= nvars) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  Monomial m;
  m.e[var] = 1;
  return monomial(p, nvars, m, 1);
}

Poly Poly::monomial(uint32_t p, int nvars, const Monomial& m, uint32_t c) {
  Poly r(p, nvars);
  c %= p;
  if (c) r.terms_.push_back({m, c});
  return r;
}

void Poly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grlex_compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = modp::add(out.back().coeff, t.coeff, p_);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(t);
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.total_degree() == 0);
}

uint32_t Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.total_degree() == 0) return terms_.back().coeff;
  return 0;
}

int Poly::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.mono.e[var]);
  return d;
}

int Poly::min_degree_in(int var) const {
  if (terms_.empty()) return -1;
  int d = 1 << 20;
  for (const auto& t : terms_) d = std::min<int>(d, t.mono.e[var]);
  return d;
}

int Poly::total_degree() const { return terms_.empty() ? -1 : terms_.front().mono.total_degree(); }

int Poly::main_variable() const {
  int v = -1;
  for (const auto& t : terms_)
    for (int i = nvars_ - 1; i > v; --i)
      if (t.mono.e[i]) {
        v = i;
        break;
      }
  return v;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = modp::neg(t.coeff, p_);
  return r;
}

namespace {

// Merge two sorted term lists; sign = +1 for addition, -1 for subtraction.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract,
                              uint32_t p) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = grlex_compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Term t = b[j++];
      if (subtract) t.coeff = modp::neg(t.coeff, p);
      out.push_back(t);
    } else {
      uint32_t v = subtract ? modp::sub(a[i].coeff, b[j].coeff, p) : modp::add(a[i].coeff, b[j].coeff, p);
      if (v) out.push_back({a[i].mono, v});
      ++i;
      ++j;
    }
  }
  return out;
}

void check_compatible(const Poly& a, const Poly& b) {
  if (a.characteristic() != b.characteristic() || a.nvars() != b.nvars())
    throw Error(ErrorKind::InvalidArgument, "polynomials from different rings");
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  check_compatible(*this, o);
  terms_ = merge_terms(terms_, o.terms_, false, p_);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_compatible(*this, o);
  terms_ = merge_terms(terms_, o.terms_, true, p_);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_compatible(*this, o);
  Poly r(p_, nvars_);
  if (is_zero() || o.is_zero()) return r;
  if (o.terms_.size() == 1) return times_monomial(o.terms_[0].mono, o.terms_[0].coeff);
  if (terms_.size() == 1) return o.times_monomial(terms_[0].mono, terms_[0].coeff);
  r.terms_.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) r.terms_.push_back({a.mono * b.mono, modp::mul(a.coeff, b.coeff, p_)});
  r.canonicalize();
  return r;
}

Poly Poly::scaled(uint32_t c) const {
  c %= p_;
  Poly r(p_, nvars_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = modp::mul(t.coeff, c, p_);
  return r;
}

Poly Poly::times_monomial(const Monomial& m, uint32_t c) const {
  c %= p_;
  Poly r(p_, nvars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves grlex order.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, modp::mul(t.coeff, c, p_)});
  return r;
}

Poly Poly::pow(uint64_t e) const {
  Poly result = constant(p_, nvars_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::frobenius() const {
  Poly r(p_, nvars_);
  for (const auto& t : terms_) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) {
      uint32_t v = uint32_t(t.mono.e[i]) * p_;
      if (v > 0xFFFF) throw Error(ErrorKind::DegreeOverflow, "frobenius exponent overflow");
      m.e[i] = static_cast<uint16_t>(v);
    }
    r.terms_.push_back({m, t.coeff});  // c^p = c in F_p
  }
  r.canonicalize();
  return r;
}

Poly Poly::derivative(int var) const {
  Poly r(p_, nvars_);
  for (const auto& t : terms_) {
    uint32_t k = t.mono.e[var] % p_;
    if (k == 0) continue;
    Monomial m = t.mono;
    m.e[var] -= 1;
    r.terms_.push_back({m, modp::mul(t.coeff, k, p_)});
  }
  r.canonicalize();
  return r;
}

Poly Poly::monic() const {
  if (is_zero() || leading().coeff == 1) return *this;
  return scaled(modp::inv(leading().coeff, p_));
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

std::vector<Poly> Poly::coefficients_in(int var) const {
  int d = degree_in(var);
  std::vector<Poly> out(d < 0 ? 0 : d + 1, Poly(p_, nvars_));
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    int k = m.e[var];
    m.e[var] = 0;
    out[k].terms_.push_back({m, t.coeff});
  }
  for (auto& c : out) c.canonicalize();
  return out;
}

Poly Poly::from_coefficients(const std::vector<Poly>& coeffs, int var, uint32_t p, int nvars) {
  Poly r(p, nvars);
  for (size_t k = 0; k < coeffs.size(); ++k)
    for (const auto& t : coeffs[k].terms_) {
      Monomial m = t.mono;
      m.e[var] = static_cast<uint16_t>(m.e[var] + k);
      r.terms_.push_back({m, t.coeff});
    }
  r.canonicalize();
  return r;
}

bool Poly::try_divide(const Poly& d, Poly* quotient) const {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  Poly q(p_, nvars_);
  Poly r = *this;
  const Term& ld = d.leading();
  uint32_t inv_ld = modp::inv(ld.coeff, p_);
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    if (!ld.mono.divides(lr.mono)) return false;
    Monomial m = lr.mono / ld.mono;
    uint32_t c = modp::mul(lr.coeff, inv_ld, p_);
    q.terms_.push_back({m, c});
    r -= d.times_monomial(m, c);
  }
  // Quotient terms were produced in decreasing order.
  if (quotient) *quotient = std::move(q);
  return true;
}

Poly Poly::divide_exact(const Poly& d) const {
  Poly q;
  if (!try_divide(d, &q)) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
  return q;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    bool has_var = t.mono.total_degree() > 0;
    if (t.coeff != 1 || !has_var) os << t.coeff;
    bool first_factor = !(t.coeff != 1 || !has_var);
    for (int i = 0; i < nvars_; ++i) {
      if (!t.mono.e[i]) continue;
      if (!first_factor) os << "*";
      first_factor = false;
      os << (i < static_cast<int>(names.size()) ? names[i] : default_var_name(i));
      if (t.mono.e[i] > 1) os << "^" << t.mono.e[i];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// GCD

namespace {

Poly content_in(const Poly& f, int var) {
  Poly g(f.characteristic(), f.nvars());
  for (const auto& c : f.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

Poly primitive_part(const Poly& f, int var) {
  if (f.is_zero()) return f;
  Poly c = content_in(f, var);
  return c.is_constant() ? f.monic() : f.divide_exact(c).monic();
}

Poly pseudo_remainder(const Poly& a, const Poly& b, int var) {
  auto bc = b.coefficients_in(var);
  int db = static_cast<int>(bc.size()) - 1;
  const Poly& lcb = bc.back();
  Poly r = a;
  while (!r.is_zero()) {
    int dr = r.degree_in(var);
    if (dr < db) break;
    Poly lcr = r.coefficients_in(var).back();
    Monomial shift;
    shift.e[var] = static_cast<uint16_t>(dr - db);
    r = lcb * r - (lcr * b).times_monomial(shift);
  }
  return r;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const uint32_t p = a.characteristic();
  const int n = a.nvars();
  if (a.is_constant() || b.is_constant()) return Poly::constant(p, n, 1);
  if (a == b) return a.monic();
  Poly fast;
  if (detail::modular_gcd(a, b, &fast)) return fast;
  int va = a.main_variable(), vb = b.main_variable();
  int v = std::max(va, vb);
  if (va < v) return gcd(a, content_in(b, v));
  if (vb < v) return gcd(content_in(a, v), b);

  Poly ca = content_in(a, v), cb = content_in(b, v);
  Poly c = gcd(ca, cb);
  Poly A = ca.is_constant() ? a : a.divide_exact(ca);
  Poly B = cb.is_constant() ? b : b.divide_exact(cb);
  if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
  Poly g(p, n);
  while (true) {
    Poly r = pseudo_remainder(A, B, v);
    if (r.is_zero()) {
      g = B;
      break;
    }
    if (r.degree_in(v) == 0) {
      g = Poly::constant(p, n, 1);
      break;
    }
    A = std::move(B);
    B = primitive_part(r, v);
  }
  g = primitive_part(g, v);
  return (g * c).monic();
}

}  // namespace pfl
