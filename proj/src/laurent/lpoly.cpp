#include "pfl/laurent/lpoly.hpp"

#include <algorithm>
#include <map>

#include "pfl/error.hpp"

namespace pfl {
namespace {

int field(uint64_t key, int i) { return static_cast<int>((key >> (8 * i)) & 0xff) - LPoly::kBias; }

uint64_t with_fields(uint64_t key, int (*f)(int)) {
  uint64_t out = 0;
  for (int i = 0; i < 8; ++i) out |= static_cast<uint64_t>(f(field(key, i)) + LPoly::kBias) << (8 * i);
  return out;
}

// Sort and drop pairs (coefficients live in F_2).
void cancel_pairs(std::vector<uint64_t>& v) {
  std::sort(v.begin(), v.end());
  size_t w = 0;
  for (size_t i = 0; i < v.size();) {
    size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) & 1) v[w++] = v[i];
    i = j;
  }
  v.resize(w);
}

bool all_even(uint64_t key) {
  for (int i = 0; i < 8; ++i)
    if (field(key, i) & 1) return false;
  return true;
}

}  // namespace

uint64_t LPoly::pack(const std::vector<int>& e) {
  if (e.size() > 8) throw Error(ErrorKind::InvalidArgument, "at most 8 variables");
  uint64_t key = kOne;
  for (size_t i = 0; i < e.size(); ++i) {
    if (std::abs(e[i]) > 127) throw Error(ErrorKind::DegreeOverflow, "Laurent exponent out of range");
    key &= ~(0xffULL << (8 * i));
    key |= static_cast<uint64_t>(e[i] + kBias) << (8 * i);
  }
  return key;
}

std::vector<int> LPoly::unpack(uint64_t key, int m) {
  std::vector<int> e(m);
  for (int i = 0; i < m; ++i) e[i] = field(key, i);
  return e;
}

LPoly LPoly::operator+(const LPoly& o) const {
  LPoly r;
  std::set_symmetric_difference(terms.begin(), terms.end(), o.terms.begin(), o.terms.end(), std::back_inserter(r.terms));
  return r;
}

LPoly LPoly::operator*(const LPoly& o) const {
  LPoly r;
  r.terms.reserve(terms.size() * o.terms.size());
  for (auto a : terms)
    for (auto b : o.terms) r.terms.push_back(mono_mul(a, b));
  cancel_pairs(r.terms);
  return r;
}

LPoly LPoly::square() const {
  LPoly r;
  for (auto k : terms) r.terms.push_back(with_fields(k, [](int x) { return 2 * x; }));
  std::sort(r.terms.begin(), r.terms.end());
  return r;
}

int LPoly::max_abs_exponent() const {
  int mx = 0;
  for (auto k : terms)
    for (int i = 0; i < 8; ++i) mx = std::max(mx, std::abs(field(k, i)));
  return mx;
}

std::string LPoly::to_string(int m) const {
  if (terms.empty()) return "0";
  std::string s;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!s.empty()) s += " + ";
    std::string mono;
    for (int i = m - 1; i >= 0; --i) {
      const int e = field(*it, i);
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(i + 1);
      if (e != 1) mono += "^" + std::to_string(e);
    }
    s += mono.empty() ? "1" : mono;
  }
  return s;
}

std::optional<LPoly> to_lpoly(const RatFunc& f, int m) {
  if (f.characteristic() != 2 || !f.den().is_monomial()) return std::nullopt;
  const Monomial& d = f.den().leading().mono;
  LPoly r;
  for (const auto& t : f.num().terms()) {
    std::vector<int> e(m);
    for (int i = 0; i < m; ++i) {
      e[i] = t.mono.e[i] - d.e[i];
      if (std::abs(e[i]) > LPoly::kMaxExponent) return std::nullopt;
    }
    r.terms.push_back(LPoly::pack(e));
  }
  std::sort(r.terms.begin(), r.terms.end());
  return r;
}

RatFunc from_lpoly(const LPoly& f, int m) {
  // Common denominator: the componentwise most negative exponents.
  Monomial shift;
  for (auto k : f.terms)
    for (int i = 0; i < m; ++i) shift.e[i] = static_cast<uint16_t>(std::max<int>(shift.e[i], -field(k, i)));
  Poly num(2, m);
  for (auto k : f.terms) {
    Monomial mm;
    for (int i = 0; i < m; ++i) mm.e[i] = static_cast<uint16_t>(field(k, i) + shift.e[i]);
    num.push_unsorted(mm, 1);
  }
  num.canonicalize();
  return RatFunc(num, Poly::monomial(2, m, shift));
}

LPoly wp_reduce(const LPoly& f, int m) {
  (void)m;
  LPoly r;
  for (auto k : f.terms) {
    while (k < LPoly::kOne && all_even(k)) k = with_fields(k, [](int x) { return x / 2; });
    if (k <= LPoly::kOne) r.terms.push_back(k);
  }
  cancel_pairs(r.terms);
  return r;
}

std::optional<LPoly> solve_square_shift(const LPoly& target, const LPoly& scale, int m, int window) {
  auto r = solve_square_shifts(target, {scale}, m, window);
  if (!r) return std::nullopt;
  return r->front();
}

std::optional<std::vector<LPoly>> solve_square_shifts(const LPoly& target, const std::vector<LPoly>& scales, int m,
                                                      int window) {
  return solve_additive_shifts(target, scales, std::vector<LPoly>(scales.size()), m, window);
}

std::optional<std::vector<LPoly>> solve_additive_shifts(const LPoly& target, const std::vector<LPoly>& scales,
                                                        const std::vector<LPoly>& linear, int m, int window) {
  int widest = 0;
  for (const auto& sc : scales) widest = std::max(widest, sc.max_abs_exponent());
  for (const auto& l : linear) widest = std::max(widest, l.max_abs_exponent());
  int count = 1;
  while (window > 0) {
    count = 1;
    for (int i = 0; i < m; ++i) count *= 2 * window + 1;
    if (count * static_cast<int>(scales.size()) <= 8192 && widest + 2 * window <= 120) break;
    --window;
  }
  if (window == 0) count = 1;
  std::vector<std::vector<int>> monos;
  std::vector<int> e(m, -window);
  for (int c = 0; c < count; ++c) {
    monos.push_back(e);
    for (int i = 0; i < m; ++i) {
      if (++e[i] <= window) break;
      e[i] = -window;
    }
  }
  const size_t per = monos.size();
  const size_t n = per * scales.size();
  const size_t words = (n + 1 + 63) / 64;
  std::map<uint64_t, std::vector<uint64_t>> rows;  // monomial -> bitset over unknowns, last bit = rhs
  auto row = [&](uint64_t key) -> std::vector<uint64_t>& {
    auto it = rows.find(key);
    if (it == rows.end()) it = rows.emplace(key, std::vector<uint64_t>(words, 0)).first;
    return it->second;
  };
  for (size_t s = 0; s < scales.size(); ++s)
    for (size_t k = 0; k < per; ++k) {
      const size_t col = s * per + k;
      const LPoly mu = LPoly::monomial(monos[k]);
      LPoly c = wp_reduce(mu.square() * scales[s] + mu * linear[s], m);
      for (auto key : c.terms) row(key)[col / 64] ^= 1ULL << (col % 64);
    }
  for (auto key : wp_reduce(target, m).terms) row(key)[n / 64] ^= 1ULL << (n % 64);
  std::vector<std::vector<uint64_t>> mat;
  for (auto& [key, bits] : rows) mat.push_back(bits);
  auto bit = [](const std::vector<uint64_t>& v, size_t i) { return (v[i / 64] >> (i % 64)) & 1; };
  std::vector<size_t> pivots;
  size_t rank = 0;
  for (size_t c = 0; c < n && rank < mat.size(); ++c) {
    size_t p = rank;
    while (p < mat.size() && !bit(mat[p], c)) ++p;
    if (p == mat.size()) continue;
    std::swap(mat[p], mat[rank]);
    for (size_t r = 0; r < mat.size(); ++r)
      if (r != rank && bit(mat[r], c))
        for (size_t w = 0; w < words; ++w) mat[r][w] ^= mat[rank][w];
    pivots.push_back(c);
    ++rank;
  }
  for (size_t r = rank; r < mat.size(); ++r)
    if (bit(mat[r], n)) return std::nullopt;
  std::vector<LPoly> out(scales.size());
  for (size_t r = 0; r < rank; ++r)
    if (bit(mat[r], n)) out[pivots[r] / per].terms.push_back(LPoly::pack(monos[pivots[r] % per]));
  for (auto& l : out) std::sort(l.terms.begin(), l.terms.end());
  return out;
}

}  // namespace pfl
