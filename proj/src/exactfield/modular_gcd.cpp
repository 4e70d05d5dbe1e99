#include "modular_gcd.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "pfl/exactfield/galois_field.hpp"

namespace pfl::detail {

namespace {

// Polynomials over GF(q): grlex-descending term lists with field codes as coefficients.
using QPoly = std::vector<Term>;
// Univariate polynomials over GF(q), lowest degree first, no trailing zeros.
using UPoly = std::vector<uint32_t>;

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

class Engine {
 public:
  explicit Engine(const GaloisField& f) : F(f) {}

  std::optional<QPoly> gcd(const QPoly& a, const QPoly& b, int k) const;

 private:
  const GaloisField& F;

  void canon(QPoly& a) const {
    std::sort(a.begin(), a.end(), [](const Term& x, const Term& y) { return grlex_compare(x.mono, y.mono) > 0; });
    size_t out = 0;
    for (size_t i = 0; i < a.size();) {
      Term t = a[i++];
      while (i < a.size() && a[i].mono == t.mono) t.coeff = F.add(t.coeff, a[i++].coeff);
      if (t.coeff) a[out++] = t;
    }
    a.resize(out);
  }

  QPoly sub(const QPoly& a, const QPoly& b) const {
    QPoly r = a;
    for (const auto& t : b) r.push_back({t.mono, F.neg(t.coeff)});
    canon(r);
    return r;
  }

  QPoly mul(const QPoly& a, const QPoly& b) const {
    QPoly r;
    r.reserve(a.size() * b.size());
    for (const auto& x : a)
      for (const auto& y : b) r.push_back({x.mono * y.mono, F.mul(x.coeff, y.coeff)});
    canon(r);
    return r;
  }

  QPoly scale(const QPoly& a, uint32_t c) const {
    QPoly r;
    if (!c) return r;
    r.reserve(a.size());
    for (const auto& t : a) r.push_back({t.mono, F.mul(t.coeff, c)});
    return r;
  }

  uint32_t power(uint32_t x, uint32_t e) const {
    uint32_t r = 1;
    while (e) {
      if (e & 1) r = F.mul(r, x);
      x = F.mul(x, x);
      e >>= 1;
    }
    return r;
  }

  int deg_in(const QPoly& a, int var) const {
    int d = 0;
    for (const auto& t : a) d = std::max<int>(d, t.mono.e[var]);
    return d;
  }

  QPoly eval(const QPoly& a, int var, uint32_t val) const {
    QPoly r;
    r.reserve(a.size());
    for (const auto& t : a) {
      Term u = t;
      u.coeff = F.mul(u.coeff, power(val, u.mono.e[var]));
      u.mono.e[var] = 0;
      if (u.coeff) r.push_back(u);
    }
    canon(r);
    return r;
  }

  // Coefficients in GF(q)[y] keyed by the remaining monomial, greatest monomial first.
  std::map<Monomial, UPoly, GrlexGreater> split(const QPoly& a, int y) const {
    std::map<Monomial, UPoly, GrlexGreater> out;
    for (const auto& t : a) {
      Monomial m = t.mono;
      int j = m.e[y];
      m.e[y] = 0;
      UPoly& u = out[m];
      if (static_cast<int>(u.size()) <= j) u.resize(j + 1, 0);
      u[j] = F.add(u[j], t.coeff);
    }
    return out;
  }

  QPoly join(const std::map<Monomial, UPoly, GrlexGreater>& parts, int y) const {
    QPoly r;
    for (const auto& [m, u] : parts)
      for (size_t j = 0; j < u.size(); ++j)
        if (u[j]) {
          Monomial mm = m;
          mm.e[y] = static_cast<uint16_t>(j);
          r.push_back({mm, u[j]});
        }
    canon(r);
    return r;
  }

  // Multiplies every coefficient of a (free of y) by the univariate u(y).
  QPoly times_upoly(const QPoly& a, const UPoly& u, int y) const {
    QPoly r;
    for (const auto& t : a)
      for (size_t j = 0; j < u.size(); ++j)
        if (u[j]) {
          Monomial m = t.mono;
          m.e[y] = static_cast<uint16_t>(m.e[y] + j);
          r.push_back({m, F.mul(t.coeff, u[j])});
        }
    canon(r);
    return r;
  }

  bool divides(const QPoly& d, QPoly r) const {
    const Term ld = d.front();
    const uint32_t inv = F.inv(ld.coeff);
    while (!r.empty()) {
      const Term lr = r.front();
      if (!ld.mono.divides(lr.mono)) return false;
      Monomial m = lr.mono / ld.mono;
      uint32_t c = F.mul(lr.coeff, inv);
      QPoly sh;
      sh.reserve(d.size());
      for (const auto& t : d) sh.push_back({t.mono * m, F.mul(t.coeff, c)});
      r = sub(r, sh);
    }
    return true;
  }

  // Univariate helpers.
  void trim(UPoly& u) const {
    while (!u.empty() && u.back() == 0) u.pop_back();
  }
  uint32_t ueval(const UPoly& u, uint32_t x) const {
    uint32_t acc = 0;
    for (size_t i = u.size(); i-- > 0;) acc = F.add(F.mul(acc, x), u[i]);
    return acc;
  }
  UPoly umul(const UPoly& a, const UPoly& b) const {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    trim(r);
    return r;
  }
  UPoly umonic(UPoly u) const {
    trim(u);
    if (u.empty()) return u;
    uint32_t inv = F.inv(u.back());
    for (auto& c : u) c = F.mul(c, inv);
    return u;
  }
  // Quotient of a by b; remainder left in a.
  UPoly udivmod(UPoly& a, const UPoly& b) const {
    trim(a);
    if (a.size() < b.size()) return {};
    UPoly q(a.size() - b.size() + 1, 0);
    uint32_t inv = F.inv(b.back());
    while (!a.empty() && a.size() >= b.size()) {
      size_t shift = a.size() - b.size();
      uint32_t c = F.mul(a.back(), inv);
      q[shift] = c;
      for (size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
      trim(a);
    }
    return q;
  }
  UPoly ugcd(UPoly a, UPoly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      udivmod(a, b);
      std::swap(a, b);
    }
    return umonic(a);
  }
  int udeg(const UPoly& u) const { return static_cast<int>(u.size()) - 1; }
};

std::optional<QPoly> Engine::gcd(const QPoly& A0, const QPoly& B0, int k) const {
  if (k < 0) return QPoly{{Monomial{}, 1}};
  if (k == 0) {
    UPoly a(deg_in(A0, 0) + 1, 0), b(deg_in(B0, 0) + 1, 0);
    for (const auto& t : A0) a[t.mono.e[0]] = t.coeff;
    for (const auto& t : B0) b[t.mono.e[0]] = t.coeff;
    UPoly g = ugcd(a, b);
    QPoly r;
    for (size_t j = 0; j < g.size(); ++j)
      if (g[j]) {
        Monomial m;
        m.e[0] = static_cast<uint16_t>(j);
        r.push_back({m, g[j]});
      }
    canon(r);
    return r;
  }
  const int y = k;
  if (deg_in(A0, y) == 0 && deg_in(B0, y) == 0) return gcd(A0, B0, k - 1);

  auto pa = split(A0, y), pb = split(B0, y);
  UPoly ca, cb;
  for (const auto& [m, u] : pa) ca = ugcd(ca, u);
  for (const auto& [m, u] : pb) cb = ugcd(cb, u);
  UPoly content = ugcd(ca, cb);
  for (auto& [m, u] : pa) u = udivmod(u, ca);
  for (auto& [m, u] : pb) u = udivmod(u, cb);
  const QPoly A = join(pa, y), B = join(pb, y);
  const UPoly& lca = pa.begin()->second;
  const UPoly& lcb = pb.begin()->second;
  const UPoly gamma = ugcd(lca, lcb);
  const int bound = udeg(gamma) + std::min(deg_in(A, y), deg_in(B, y));

  std::optional<QPoly> G;
  Monomial lead;
  UPoly modulus{1};
  int points = 0;
  for (uint32_t a = 0; a < F.order(); ++a) {
    if (ueval(lca, a) == 0 || ueval(lcb, a) == 0) continue;
    auto image = gcd(eval(A, y, a), eval(B, y, a), k - 1);
    if (!image) return std::nullopt;
    if (image->size() == 1 && image->front().mono.total_degree() == 0) {
      // Coprime primitive parts: the gcd is the content gcd.
      QPoly r;
      for (size_t j = 0; j < content.size(); ++j)
        if (content[j]) {
          Monomial m;
          m.e[y] = static_cast<uint16_t>(j);
          r.push_back({m, content[j]});
        }
      canon(r);
      return r;
    }
    QPoly img = scale(*image, F.mul(ueval(gamma, a), F.inv(image->front().coeff)));
    const Monomial lm = img.front().mono;
    if (G) {
      int c = grlex_compare(lm, lead);
      if (c > 0) continue;
      if (c < 0) G.reset();
    }
    UPoly linear{F.neg(a), 1};
    if (!G) {
      G = img;
      lead = lm;
      modulus = linear;
      points = 1;
      continue;
    }
    QPoly diff = sub(img, eval(*G, y, a));
    if (!diff.empty()) {
      UPoly basis = modulus;
      uint32_t s = F.inv(ueval(modulus, a));
      for (auto& c : basis) c = F.mul(c, s);
      QPoly upd = times_upoly(diff, basis, y);
      QPoly next = *G;
      next.insert(next.end(), upd.begin(), upd.end());
      canon(next);
      G = std::move(next);
    }
    modulus = umul(modulus, linear);
    ++points;
    if (diff.empty() || points > bound) {
      auto parts = split(*G, y);
      UPoly cg;
      for (const auto& [m, u] : parts) cg = ugcd(cg, u);
      for (auto& [m, u] : parts) u = udivmod(u, cg);
      QPoly H = join(parts, y);
      if (divides(H, A) && divides(H, B)) {
        QPoly r = times_upoly(H, content, y);
        return r;
      }
    }
  }
  return std::nullopt;
}

const GaloisField& extension_for(uint32_t p) {
  thread_local std::map<uint32_t, std::shared_ptr<const GaloisField>> cache;
  auto& f = cache[p];
  if (!f) {
    int k = 1;
    uint64_t q = p;
    while (q < 200 && k < 8) {
      q *= p;
      ++k;
    }
    f = GaloisField::create(p, k);
  }
  return *f;
}

}  // namespace

bool modular_gcd(const Poly& a, const Poly& b, Poly* out) {
  const uint32_t p = a.characteristic();
  const int n = a.nvars();
  if (p > (1u << 22)) return false;
  // Compress to the variables that occur; the last one is evaluated first.
  std::vector<int> used;
  for (int i = 0; i < n; ++i)
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) used.push_back(i);
  auto to_q = [&](const Poly& f) {
    QPoly r;
    r.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
      Monomial m;
      for (size_t j = 0; j < used.size(); ++j) m.e[j] = t.mono.e[used[j]];
      r.push_back({m, t.coeff});
    }
    std::sort(r.begin(), r.end(), [](const Term& x, const Term& y) { return grlex_compare(x.mono, y.mono) > 0; });
    return r;
  };
  Engine eng(extension_for(p));
  auto g = eng.gcd(to_q(a), to_q(b), static_cast<int>(used.size()) - 1);
  if (!g || g->empty()) return false;
  // The monic gcd over the extension has coefficients in F_p.
  uint32_t inv = extension_for(p).inv(g->front().coeff);
  Poly r(p, n);
  for (const auto& t : *g) {
    uint32_t c = extension_for(p).mul(t.coeff, inv);
    if (c >= p) return false;
    Monomial m;
    for (size_t j = 0; j < used.size(); ++j) m.e[used[j]] = t.mono.e[j];
    r.push_unsorted(m, c);
  }
  r.canonicalize();
  *out = r.monic();
  return true;
}

}  // namespace pfl::detail
