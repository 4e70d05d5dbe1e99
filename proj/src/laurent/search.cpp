#include "pfl/laurent/search.hpp"

#include <algorithm>
#include <atomic>
#include <functional>

namespace pfl {
namespace {

uint64_t splitmix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Poly lcm(const Poly& a, const Poly& b) { return a * b.divide_exact(gcd(a, b)); }

}  // namespace

LaurentSearch::LaurentSearch(const GeneralQuad<RatFunc>& q, int m, SearchParams params)
    : m_(m), n_(q.dim()), params_(params) {
  Poly den = Poly::constant(2, m, 1);
  for (const auto& row : q.m)
    for (const auto& c : row)
      if (!c.is_zero()) den = lcm(den, c.den());
  const RatFunc scale(den);
  coef_.assign(n_, std::vector<LPoly>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) {
      if (q.m[i][j].is_zero()) continue;
      auto lp = to_lpoly(q.m[i][j] * scale, m);
      if (!lp || lp->max_abs_exponent() > LPoly::kMaxExponent - 4 * params_.window) {
        supported_ = false;
        return;
      }
      coef_[i][j] = *lp;
    }
  std::vector<int> e(m, -params_.window);
  while (true) {
    window_monomials_.push_back(LPoly::pack(e));
    int i = 0;
    while (i < m && ++e[i] > params_.window) e[i++] = -params_.window;
    if (i == m) break;
  }
  // Position tuples of size 1..exhaustive_support; the first coordinate is fixed to 1.
  const uint64_t w = window_monomials_.size();
  std::vector<int> pos;
  std::function<void(int)> rec = [&](int start) {
    if (!pos.empty()) {
      uint64_t count = 1;
      for (size_t k = 1; k < pos.size(); ++k) count *= w;
      shapes_.push_back({pos, exhaustive_total_, count});
      exhaustive_total_ += count;
    }
    if (static_cast<int>(pos.size()) == params_.exhaustive_support) return;
    for (int p = start; p < n_; ++p) {
      pos.push_back(p);
      rec(p + 1);
      pos.pop_back();
    }
  };
  rec(0);
}

std::vector<LPoly> LaurentSearch::candidate(uint64_t index) const {
  std::vector<LPoly> v(n_);
  if (index < exhaustive_total_) {
    auto it = std::upper_bound(shapes_.begin(), shapes_.end(), index,
                               [](uint64_t x, const Shape& s) { return x < s.offset; });
    const Shape& s = *(it - 1);
    uint64_t r = index - s.offset;
    v[s.positions[0]] = LPoly::one();
    for (size_t k = 1; k < s.positions.size(); ++k) {
      v[s.positions[k]] = LPoly{{window_monomials_[r % window_monomials_.size()]}};
      r /= window_monomials_.size();
    }
    return v;
  }
  uint64_t state = splitmix(params_.seed ^ splitmix(index));
  auto next = [&state]() { return state = splitmix(state); };
  bool any = false;
  for (int i = 0; i < n_; ++i) {
    if (next() & 1) continue;
    const int terms = 1 + static_cast<int>(next() % params_.max_terms);
    LPoly c;
    for (int t = 0; t < terms; ++t) c = c + LPoly{{window_monomials_[next() % window_monomials_.size()]}};
    v[i] = c;
    any = any || !c.is_zero();
  }
  if (!any) v[next() % n_] = LPoly::one();
  return v;
}

bool LaurentSearch::isotropic(const std::vector<LPoly>& v) const {
  std::vector<uint64_t> acc;
  for (int i = 0; i < n_; ++i) {
    if (v[i].is_zero()) continue;
    for (int j = i; j < n_; ++j) {
      if (v[j].is_zero() || coef_[i][j].is_zero()) continue;
      for (auto a : v[i].terms)
        for (auto b : v[j].terms)
          for (auto c : coef_[i][j].terms) acc.push_back(mono_mul(mono_mul(a, b), c));
    }
  }
  std::sort(acc.begin(), acc.end());
  for (size_t i = 0; i < acc.size();) {
    size_t j = i;
    while (j < acc.size() && acc[j] == acc[i]) ++j;
    if ((j - i) & 1) return false;
    i = j;
  }
  return true;
}

SearchHit LaurentSearch::hit(uint64_t index) const {
  SearchHit h;
  h.index = index;
  for (const auto& c : candidate(index)) h.vector.push_back(from_lpoly(c, m_));
  return h;
}

std::optional<SearchHit> LaurentSearch::run_serial() const {
  if (!supported_ || n_ == 0) return std::nullopt;
  for (uint64_t i = 0; i < candidate_count(); ++i)
    if (isotropic(candidate(i))) return hit(i);
  return std::nullopt;
}

std::optional<SearchHit> LaurentSearch::run_parallel() const {
  if (!supported_ || n_ == 0) return std::nullopt;
  const int64_t total = static_cast<int64_t>(candidate_count());
  std::atomic<int64_t> best{total};
#pragma omp parallel for schedule(dynamic, 512)
  for (int64_t i = 0; i < total; ++i) {
    if (i >= best.load(std::memory_order_relaxed)) continue;
    if (!isotropic(candidate(static_cast<uint64_t>(i)))) continue;
    int64_t cur = best.load();
    while (i < cur && !best.compare_exchange_weak(cur, i)) {
    }
  }
  if (best.load() == total) return std::nullopt;
  return hit(static_cast<uint64_t>(best.load()));
}

}  // namespace pfl
