#include "pfl/laurent/artin_schreier.hpp"

#include <map>

#include "pfl/error.hpp"

namespace pfl {
namespace {

RatFunc embed(const Poly& p) { return RatFunc(p); }

// Coefficients c_n (n <= 0) of the t_var-adic expansion of s.
std::map<int, RatFunc> polar_part(const RatFunc& s, int var) {
  std::map<int, RatFunc> out;
  const RatFunc zero = s.zero_like();
  const int d = s.den().min_degree_in(var);
  auto dc = s.den().coefficients_in(var);
  auto nc = s.num().coefficients_in(var);
  // N / D' with D' = D / t^d; series coefficient j corresponds to order j - d.
  const RatFunc lead = embed(dc[d]);
  std::vector<RatFunc> series;
  for (int j = 0; j <= d; ++j) {
    RatFunc acc = j < static_cast<int>(nc.size()) ? embed(nc[j]) : zero;
    for (int i = 1; i <= j; ++i) {
      const int k = d + i;
      if (k < static_cast<int>(dc.size()) && !dc[k].is_zero()) acc -= embed(dc[k]) * series[j - i];
    }
    series.push_back(acc / lead);
    if (!series.back().is_zero()) out.emplace(j - d, series.back());
  }
  return out;
}

std::string monomial_name(int var, int n) { return "t" + std::to_string(var + 1) + "^" + std::to_string(n); }

}  // namespace

WpSplit wp_split(const RatFunc& s, int levels) {
  WpSplit r;
  r.root = s.zero_like();
  if (levels == 0) {
    if (!s.is_constant()) throw Error(ErrorKind::InvalidArgument, "level-0 element must be a constant");
    r.trivial = s.is_zero();
    if (!r.trivial) r.obstruction = "constant 1 is not in the image over F_2";
    r.remainder = s.zero_like();
    return r;
  }
  if (s.is_zero()) {
    r.trivial = true;
    r.remainder = s;
    return r;
  }
  const int var = levels - 1;
  const RatFunc t = RatFunc::variable(2, s.nvars(), var);
  auto coeffs = polar_part(s, var);
  RatFunc c0 = s.zero_like();
  while (!coeffs.empty()) {
    auto it = coeffs.begin();
    const int n = it->first;
    const RatFunc c = it->second;
    coeffs.erase(it);
    if (c.is_zero()) continue;
    if (n == 0) {
      c0 = c;
      continue;
    }
    if (n % 2 != 0) {
      r.obstruction = "odd pole " + monomial_name(var, n);
      return r;
    }
    auto parts = two_basis_coordinates(c);
    for (size_t k = 1; k < parts.size(); ++k)
      if (!parts[k].is_zero()) {
        r.obstruction = "non-square coefficient at even pole " + monomial_name(var, n);
        return r;
      }
    // c t^n = (d t^{n/2})^2 folds onto d t^{n/2}.
    const RatFunc d = parts[0];
    r.root += d * t.pow(n / 2);
    auto [slot, fresh] = coeffs.emplace(n / 2, d);
    if (!fresh) slot->second += d;
  }
  WpSplit inner = wp_split(c0, levels - 1);
  if (!inner.trivial) {
    r.obstruction = inner.obstruction;
    return r;
  }
  r.root += inner.root;
  r.remainder = s - r.root * r.root - r.root;
  if (!in_maximal_ideal(r.remainder, levels))
    throw Error(ErrorKind::IdentityFailed, "Artin-Schreier reduction left a non-positive remainder");
  r.trivial = true;
  return r;
}

RatFunc hensel_approximation(const WpSplit& w, int steps) {
  RatFunc z = w.root, pw = w.remainder;
  for (int i = 0; i < steps; ++i) {
    z += pw;
    pw = pw * pw;
  }
  return z;
}

}  // namespace pfl
