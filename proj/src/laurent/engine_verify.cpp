#include "pfl/error.hpp"
#include "pfl/exactfield/linalg.hpp"
#include "pfl/laurent/artin_schreier.hpp"
#include "pfl/laurent/engine.hpp"

namespace pfl {
namespace {

using V = Vec<RatFunc>;

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

}  // namespace

bool verify_lagrangian(const QForm<RatFunc>& phi, const std::vector<V>& basis, int expected_rank) {
  const auto g = to_general(phi);
  for (size_t i = 0; i < basis.size(); ++i) {
    if (static_cast<int>(basis[i].size()) != phi.dim()) return false;
    if (!g.eval(basis[i]).is_zero()) return false;
    for (size_t j = i + 1; j < basis.size(); ++j)
      if (!g.polar(basis[i], basis[j]).is_zero()) return false;
  }
  return matrix_rank(basis) == expected_rank;
}

bool verify_witt(const QForm<RatFunc>& phi, const LaurentCtx& ctx, const LaurentWitt& w, std::string* why) {
  const auto g = to_general(phi);
  const int n = phi.dim();
  const RatFunc one = phi.unit;
  std::vector<std::vector<V>> groups;  // mutually orthogonal pieces
  for (const auto& p : w.planes) {
    if (!g.eval(p.u).is_zero() || !g.eval(p.w).is_zero()) return fail(why, "hyperbolic pair vector not isotropic");
    if (g.polar(p.u, p.w) != one) return fail(why, "hyperbolic pair with B(u, w) != 1");
    groups.push_back({p.u, p.w});
  }
  for (const auto& h : w.hensel_planes) {
    if (g.eval(h.e) != h.a || g.eval(h.f) != h.b || g.polar(h.e, h.f) != one)
      return fail(why, "Hensel plane values do not match");
    if (h.a * h.b != h.root * h.root + h.root + h.remainder) return fail(why, "Hensel identity fails");
    if (!in_maximal_ideal(ctx.to_model(h.remainder), ctx.m)) return fail(why, "Hensel remainder not small");
    const RatFunc z = hensel_approximation(WpSplit{true, h.root, h.remainder, {}}, 3);
    const RatFunc residual = g.eval(axpy(h.f, z / h.a, h.e));
    if (!in_maximal_ideal(ctx.to_model(residual * h.a), ctx.m)) return fail(why, "truncated Hensel root check fails");
    groups.push_back({h.e, h.f});
  }
  for (const auto& d : w.defects) {
    if (!g.eval(d).is_zero()) return fail(why, "defect vector not isotropic");
    for (int k = 0; k < n; ++k) {
      V ek(n, phi.zero());
      ek[k] = one;
      if (!g.polar(d, ek).is_zero()) return fail(why, "defect vector outside the radical");
    }
    groups.push_back({d});
  }
  const size_t nb = w.remainder.blocks.size();
  if (w.remainder_basis.size() != static_cast<size_t>(w.remainder.dim())) return fail(why, "remainder basis size");
  for (size_t k = 0; k < nb; ++k) {
    const V& e = w.remainder_basis[2 * k];
    const V& f = w.remainder_basis[2 * k + 1];
    if (g.eval(e) != w.remainder.blocks[k].first || g.eval(f) != w.remainder.blocks[k].second ||
        g.polar(e, f) != one)
      return fail(why, "remainder block does not match its basis");
    groups.push_back({e, f});
  }
  for (size_t k = 0; k < w.remainder.quasi.size(); ++k) {
    const V& z = w.remainder_basis[2 * nb + k];
    if (g.eval(z) != w.remainder.quasi[k]) return fail(why, "remainder quasilinear entry does not match");
    groups.push_back({z});
  }
  std::vector<V> all;
  for (size_t a = 0; a < groups.size(); ++a) {
    for (size_t b = a + 1; b < groups.size(); ++b)
      for (const auto& x : groups[a])
        for (const auto& y : groups[b])
          if (!g.polar(x, y).is_zero()) return fail(why, "witness pieces are not orthogonal");
    all.insert(all.end(), groups[a].begin(), groups[a].end());
  }
  // Remainder quasilinear vectors must also be radical.
  for (size_t k = 0; k < w.remainder.quasi.size(); ++k)
    for (const auto& x : all)
      if (!g.polar(w.remainder_basis[2 * nb + k], x).is_zero()) return fail(why, "quasilinear vector not radical");
  if (matrix_rank(all) != n) return fail(why, "witness vectors do not form a basis");
  return true;
}

HyperbolicityVerdict decide_hyperbolic(const PfisterQuad<RatFunc>& pi, const LaurentCtx& ctx,
                                       const SearchParams& params) {
  const QForm<RatFunc> phi = pi.expand();
  HyperbolicityVerdict v;
  v.detail = witt_index_laurent(phi, ctx, params);
  std::string why;
  if (!verify_witt(phi, ctx, v.detail, &why)) throw Error(ErrorKind::IdentityFailed, "witness re-check: " + why);
  const int half = phi.dim() / 2;
  if (v.detail.lower == half) {
    v.verdict = Verdict::Hyperbolic;
    for (const auto& p : v.detail.planes) v.lagrangian.push_back(p.u);
    if (!verify_lagrangian(phi, v.lagrangian, static_cast<int>(v.lagrangian.size())))
      throw Error(ErrorKind::IdentityFailed, "Lagrangian re-check failed");
    if (!v.detail.hensel_planes.empty())
      v.note = std::to_string(v.detail.hensel_planes.size()) + " isotropic line(s) given by Hensel certificates";
  } else if (v.detail.decided() && v.detail.lower == 0) {
    v.verdict = Verdict::Anisotropic;
  } else if (v.detail.decided()) {
    throw Error(ErrorKind::IdentityFailed, "Pfister form certified isotropic but not hyperbolic");
  } else {
    v.verdict = Verdict::Inconclusive;
    if (v.detail.lower > 0) v.note = "isotropic (so hyperbolic as a Pfister form) but the Lagrangian is incomplete";
  }
  return v;
}

}  // namespace pfl
