#include "pfl/exactfield/galois_field.hpp"

#include <sstream>

#include "pfl/error.hpp"
#include "pfl/exactfield/prime_field.hpp"

namespace pfl {

namespace {

// Polynomials over F_p as coefficient vectors, lowest degree first.
using UPoly = std::vector<uint32_t>;

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly upoly_mod(UPoly a, const UPoly& m, uint32_t p) {
  trim(a);
  const size_t dm = m.size() - 1;
  uint32_t inv_lc = modp::inv(m.back(), p);
  while (a.size() > dm) {
    uint32_t c = modp::mul(a.back(), inv_lc, p);
    size_t shift = a.size() - 1 - dm;
    for (size_t i = 0; i <= dm; ++i) a[shift + i] = modp::sub(a[shift + i], modp::mul(c, m[i], p), p);
    trim(a);
  }
  return a;
}

UPoly from_code(uint32_t v, uint32_t p, int k) {
  UPoly a(k, 0);
  for (int i = 0; i < k; ++i) {
    a[i] = v % p;
    v /= p;
  }
  return a;
}

uint32_t to_code(const UPoly& a, uint32_t p) {
  uint32_t v = 0;
  for (size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

uint32_t ipow(uint32_t b, int e) {
  uint32_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool GaloisField::is_irreducible(uint32_t p, const std::vector<uint32_t>& poly) {
  UPoly f = poly;
  trim(f);
  int k = static_cast<int>(f.size()) - 1;
  if (k < 1) return false;
  if (k == 1) return true;
  // Trial division by every monic polynomial of degree 1..k/2.
  for (int d = 1; d <= k / 2; ++d) {
    uint32_t count = ipow(p, d);
    for (uint32_t code = 0; code < count; ++code) {
      UPoly g = from_code(code, p, d);
      g.push_back(1);
      if (upoly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::shared_ptr<const GaloisField> GaloisField::create(uint32_t p, int k, std::vector<uint32_t> modulus) {
  if (!modp::is_prime(p)) throw Error(ErrorKind::InvalidArgument, "characteristic must be prime");
  if (k < 1 || k > 8) throw Error(ErrorKind::InvalidArgument, "extension degree must be in [1, 8]");
  if (ipow(p, k) > (1u << 22)) throw Error(ErrorKind::InvalidArgument, "field too large");
  if (k > 1) {
    if (modulus.empty()) {
      uint32_t count = ipow(p, k);
      for (uint32_t code = 0; code < count; ++code) {
        UPoly g = from_code(code, p, k);
        g.push_back(1);
        if (is_irreducible(p, g)) {
          modulus = g;
          break;
        }
      }
    }
    if (static_cast<int>(modulus.size()) != k + 1 || modulus.back() != 1)
      throw Error(ErrorKind::InvalidArgument, "modulus must be monic of degree k");
    if (!is_irreducible(p, modulus)) throw Error(ErrorKind::InvalidArgument, "modulus is reducible");
  } else {
    modulus = {0, 1};
  }
  return std::shared_ptr<const GaloisField>(new GaloisField(p, k, std::move(modulus)));
}

GaloisField::GaloisField(uint32_t p, int k, std::vector<uint32_t> modulus)
    : p_(p), k_(k), q_(ipow(p, k)), modulus_(std::move(modulus)) {
  log_.assign(q_, 0);
  exp_.assign(2 * q_, 0);
  // Find a primitive element by brute force.
  for (uint32_t g = 1; g < q_; ++g) {
    uint32_t x = 1;
    uint32_t order = 0;
    do {
      x = mul_slow(x, g);
      ++order;
    } while (x != 1 && order < q_);
    if (order != q_ - 1) continue;
    x = 1;
    for (uint32_t i = 0; i < q_ - 1; ++i) {
      exp_[i] = x;
      log_[x] = i;
      x = mul_slow(x, g);
    }
    for (uint32_t i = q_ - 1; i < 2 * q_; ++i) exp_[i] = exp_[i - (q_ - 1)];
    return;
  }
  throw Error(ErrorKind::InvalidArgument, "no primitive element found");
}

uint32_t GaloisField::mul_slow(uint32_t a, uint32_t b) const {
  if (k_ == 1) return modp::mul(a, b, p_);
  UPoly x = from_code(a, p_, k_), y = from_code(b, p_, k_);
  UPoly prod(2 * k_, 0);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) prod[i + j] = modp::add(prod[i + j], modp::mul(x[i], y[j], p_), p_);
  return to_code(upoly_mod(prod, modulus_, p_), p_);
}

uint32_t GaloisField::add(uint32_t a, uint32_t b) const {
  if (p_ == 2) return a ^ b;
  uint32_t r = 0, base = 1;
  for (int i = 0; i < k_; ++i) {
    r += modp::add(a % p_, b % p_, p_) * base;
    a /= p_;
    b /= p_;
    base *= p_;
  }
  return r;
}

uint32_t GaloisField::neg(uint32_t a) const {
  if (p_ == 2) return a;
  uint32_t r = 0, base = 1;
  for (int i = 0; i < k_; ++i) {
    r += modp::neg(a % p_, p_) * base;
    a /= p_;
    base *= p_;
  }
  return r;
}

uint32_t GaloisField::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t GaloisField::mul(uint32_t a, uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

uint32_t GaloisField::inv(uint32_t a) const {
  if (a == 0) throw Error(ErrorKind::ZeroInverse, "inverse of 0 in " + name());
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

uint32_t GaloisField::trace(uint32_t a) const {
  uint32_t t = 0, x = a;
  for (int i = 0; i < k_; ++i) {
    t = add(t, x);
    uint32_t y = 1;
    for (uint32_t j = 0; j < p_; ++j) y = mul(y, x);
    x = y;
  }
  return t;  // lies in the prime field, so its code is < p
}

GFElem GaloisField::zero() const { return {shared_from_this(), 0}; }
GFElem GaloisField::one() const { return {shared_from_this(), 1}; }

GFElem GaloisField::element(uint32_t code) const {
  if (code >= q_) throw Error(ErrorKind::InvalidArgument, "element code out of range");
  return {shared_from_this(), code};
}

GFElem GaloisField::generator_u() const {
  if (k_ == 1) throw Error(ErrorKind::InvalidArgument, "prime field has no adjoined root");
  return {shared_from_this(), p_};
}

std::vector<GFElem> GaloisField::elements() const {
  std::vector<GFElem> out;
  out.reserve(q_);
  for (uint32_t c = 0; c < q_; ++c) out.emplace_back(shared_from_this(), c);
  return out;
}

std::string GaloisField::name() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (k_ > 1) os << "^" << k_;
  os << ")";
  return os.str();
}

GFElem GFElem::from_int(int64_t c) const { return {f_, modp::reduce(c, f_->characteristic())}; }

GFElem GFElem::operator/(const GFElem& o) const { return *this * o.inverse(); }

GFElem GFElem::inverse() const { return {f_, f_->inv(v_)}; }

GFElem GFElem::pow(int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  GFElem r = one_like(), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

GFElem GFElem::sqrt() const {
  if (characteristic() != 2) throw Error(ErrorKind::WrongCharacteristic, "sqrt needs characteristic 2");
  // x -> x^2 is an automorphism of order k; its inverse is x -> x^(2^(k-1)).
  GFElem r = *this;
  for (int i = 1; i < f_->degree(); ++i) r = r * r;
  return r;
}

std::string GFElem::to_string() const {
  const uint32_t p = f_->characteristic();
  const int k = f_->degree();
  if (k == 1) return std::to_string(v_);
  if (v_ == 0) return "0";
  std::ostringstream os;
  bool first = true;
  uint32_t v = v_;
  std::vector<uint32_t> digits(k);
  for (int i = 0; i < k; ++i) {
    digits[i] = v % p;
    v /= p;
  }
  for (int i = k - 1; i >= 0; --i) {
    if (!digits[i]) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << digits[i];
      continue;
    }
    if (digits[i] != 1) os << digits[i] << "*";
    os << "u";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

GFElem field_inverse(const GFElem& a) { return a.inverse(); }

}  // namespace pfl
