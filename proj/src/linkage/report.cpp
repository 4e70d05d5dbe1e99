#include <cmath>
#include <map>

#include "pfl/error.hpp"
#include "pfl/laurent/lpoly.hpp"
#include "pfl/linkage/linkage.hpp"

namespace pfl {
namespace {

// Products of nonempty subsets of the slots, in t-coordinates.
std::optional<std::vector<LPoly>> subset_products(const std::vector<RatFunc>& slots, const LaurentCtx& ctx) {
  std::vector<LPoly> singles;
  for (const auto& s : slots) {
    auto l = to_lpoly(ctx.to_model(s), ctx.m);
    if (!l || l->terms.size() != 1) return std::nullopt;
    singles.push_back(*l);
  }
  std::vector<LPoly> out;
  for (unsigned mask = 1; mask < (1u << singles.size()); ++mask) {
    LPoly p = LPoly::one();
    for (size_t i = 0; i < singles.size(); ++i)
      if (mask >> i & 1) p = p * singles[i];
    out.push_back(p);
  }
  return out;
}

void check_pair(const PfisterQuad<RatFunc>& phi, const PfisterQuad<RatFunc>& psi, int m) {
  if (phi.fold() != psi.fold()) throw Error(ErrorKind::FoldMismatch, "linkage needs forms of equal fold");
  if (m < 1 || m >= phi.fold()) throw Error(ErrorKind::InvalidArgument, "m must lie in 1..n-1");
}

}  // namespace

// Values of <<a_1..a_k, s]] beyond s: a_S * (u^2 + u v + s v^2). For fixed v the map u -> u^2 + u v is
// additive, so each choice of v gives a linear system. v is nonzero in at most one block at a time.
std::vector<RatFunc> solve_common_slots(const PfisterQuad<RatFunc>& phi, const PfisterQuad<RatFunc>& psi,
                                        const LaurentCtx& ctx, int window) {
  const int m = ctx.m;
  auto s = to_lpoly(ctx.to_model(phi.as_slot), m);
  auto s2 = to_lpoly(ctx.to_model(psi.as_slot), m);
  auto a = subset_products(phi.bilin_slots, ctx);
  auto b = subset_products(psi.bilin_slots, ctx);
  if (!s || !s2 || !a || !b) return {};
  std::vector<LPoly> scales = *a, own = std::vector<LPoly>(a->size(), *s);
  scales.insert(scales.end(), b->begin(), b->end());
  own.insert(own.end(), b->size(), *s2);

  auto monomials = [m](int window) {
    std::vector<LPoly> out;
    std::vector<int> e(m, -window);
    for (int c = 0, total = static_cast<int>(std::pow(2 * window + 1, m)); c < total; ++c) {
      out.push_back(LPoly::monomial(e));
      for (int i = 0; i < m; ++i) {
        if (++e[i] <= window) break;
        e[i] = -window;
      }
    }
    return out;
  };

  // v[i] is the fixed second coordinate in block i.
  auto attempt = [&](const std::vector<LPoly>& v) -> std::optional<RatFunc> {
    std::vector<LPoly> linear(scales.size());
    LPoly target = *s + *s2;
    for (size_t i = 0; i < scales.size(); ++i) {
      if (v[i].is_zero()) continue;
      linear[i] = scales[i] * v[i];
      target = target + scales[i] * own[i] * v[i].square();
    }
    auto sol = solve_additive_shifts(target, scales, linear, m, window);
    if (!sol) return std::nullopt;
    LPoly c = *s;
    for (size_t i = 0; i < a->size(); ++i) {
      const LPoly& u = (*sol)[i];
      c = c + u.square() * scales[i] + u * linear[i];
      if (!v[i].is_zero()) c = c + scales[i] * own[i] * v[i].square();
    }
    c = wp_reduce(c, m);
    if (c.is_zero()) return std::nullopt;
    return ctx.from_model(from_lpoly(c, m));
  };

  const std::vector<LPoly> none(scales.size());
  if (auto c = attempt(none)) return {*c};
  for (size_t block = 0; block < scales.size(); ++block)
    for (const auto& v : monomials(1)) {
      auto vv = none;
      vv[block] = v;
      if (auto c = attempt(vv)) return {*c};
    }
  // One block per side with a_S s / (b_T s') a square monomial r^2: tying w = v r cancels the
  // constant terms, leaving a linear system.
  for (size_t i = 0; i < a->size(); ++i)
    for (size_t j = a->size(); j < scales.size(); ++j) {
      const LPoly num = scales[i] * own[i];
      const LPoly den = scales[j] * own[j];
      if (num.terms.size() != 1 || den.terms.size() != 1) continue;
      std::vector<int> ratio = LPoly::unpack(num.terms[0], m), d = LPoly::unpack(den.terms[0], m);
      bool square = true;
      for (int k = 0; k < m; ++k) {
        ratio[k] -= d[k];
        square = square && ratio[k] % 2 == 0;
        ratio[k] /= 2;
      }
      if (!square) continue;
      const LPoly root = LPoly::monomial(ratio);
      for (const auto& v : monomials(2)) {
        auto vv = none;
        vv[i] = v;
        vv[j] = v * root;
        if (auto c = attempt(vv)) return {*c};
      }
    }
  return {};
}

bool verify_entry(const FactorEntry& e, const PfisterQuad<RatFunc>& phi, const PfisterQuad<RatFunc>& psi,
                  const LaurentCtx& ctx, std::string* why) {
  auto tested = [&](const PfisterQuad<RatFunc>& f) {
    return orthogonal_sum(f.expand(), e.quad ? e.quad->expand() : q_of_bilinear(e.bilin->expand()));
  };
  if (e.quad.has_value() == e.bilin.has_value()) {
    if (why) *why = "entry must carry exactly one candidate";
    return false;
  }
  const std::string printed = e.quad ? describe(*e.quad) : describe(*e.bilin);
  if (printed != e.form) {
    if (why) *why = "printed form does not match the candidate";
    return false;
  }
  return verify_factor(e.on_phi, tested(phi), ctx, why) && verify_factor(e.on_psi, tested(psi), ctx, why);
}

LinkageReport linkage_report(const PfisterQuad<RatFunc>& phi, const PfisterQuad<RatFunc>& psi, int m,
                             const SlotFamily& family, const LaurentCtx& ctx, const SearchParams& params) {
  check_pair(phi, psi, m);
  LinkageReport rep;
  rep.m = m;
  rep.family = family.description;
  rep.model = ctx.name();
  const QForm<RatFunc> sum = orthogonal_sum(phi.expand(), psi.expand());
  rep.sum_index = witt_index_laurent(sum, ctx, params);
  std::string why;
  if (!verify_witt(sum, ctx, rep.sum_index, &why)) throw Error(ErrorKind::IdentityFailed, "linkage bound re-check: " + why);

  std::vector<QuadCandidate> quads = quad_candidates({phi, psi}, m, family, ctx);
  if (m == 1) {
    size_t pos = 0;
    while (pos < quads.size() && quads[pos].origin == "syntactic") ++pos;
    for (const auto& c : solve_common_slots(phi, psi, ctx, 3)) {
      PfisterQuad<RatFunc> f({}, c);
      bool dup = false;
      for (const auto& q : quads) dup = dup || describe(q.form) == describe(f);
      if (!dup) quads.insert(quads.begin() + static_cast<long>(pos++), {f, "solver"});
    }
  }

  // Shared scan: first common factor and first discrepancy.
  auto scan = [&](LinkageField& common, LinkageField& total, size_t count, auto&& entry_of) {
    bool total_unknown = false;
    for (size_t i = 0; i < count; ++i) {
      FactorEntry e = entry_of(i);
      const Tri a = e.on_phi.verdict, b = e.on_psi.verdict;
      if (a == Tri::Yes && b == Tri::Yes && !common.witness) common.witness = e;
      if (a == Tri::Unknown || b == Tri::Unknown)
        total_unknown = true;
      else if (a != b && !total.witness)
        total.witness = e;
    }
    common.value = common.witness ? Tri::Yes : rep.sum_index.upper < (1 << m) ? Tri::No : Tri::Unknown;
    total.value = total.witness ? Tri::No : total_unknown ? Tri::Unknown : Tri::Yes;
    if (!common.witness)
      common.note = common.value == Tri::No ? "i_W(phi _|_ psi) below 2^m" : "no common factor among the candidates";
    if (total.witness) total.note = "factor of exactly one form";
    total.note += (total.note.empty() ? "" : "; ") + std::string("relative to ") + family.description;
  };

  scan(rep.separable, rep.total_separable, quads.size(), [&](size_t i) {
    FactorEntry e{describe(quads[i].form), quads[i].origin, is_quad_factor(quads[i].form, phi, ctx, params),
                  is_quad_factor(quads[i].form, psi, ctx, params), quads[i].form, std::nullopt};
    return e;
  });

  std::vector<BilinCandidate> bils = bilin_candidates({phi, psi}, m, family, ctx);
  scan(rep.inseparable, rep.total_inseparable, bils.size(), [&](size_t i) {
    FactorEntry e{describe(bils[i].form), bils[i].origin, is_bilin_factor(bils[i].form, phi, ctx, params),
                  is_bilin_factor(bils[i].form, psi, ctx, params), std::nullopt, bils[i].form};
    return e;
  });
  return rep;
}

FactorSet enumerate_factors(const PfisterQuad<RatFunc>& phi, int m, const SlotFamily& family, const LaurentCtx& ctx,
                            const SearchParams& params) {
  if (m < 1 || m > phi.fold()) throw Error(ErrorKind::InvalidArgument, "m must lie in 1..n");
  FactorSet out;
  for (const auto& c : quad_candidates({phi}, m, family, ctx)) {
    const Tri v = is_quad_factor(c.form, phi, ctx, params).verdict;
    if (v == Tri::Yes) out.quadratic.push_back(c);
    if (v == Tri::Unknown) ++out.undecided;
  }
  if (m < phi.fold())
    for (const auto& c : bilin_candidates({phi}, m, family, ctx)) {
      const Tri v = is_bilin_factor(c.form, phi, ctx, params).verdict;
      if (v == Tri::Yes) out.bilinear.push_back(c);
      if (v == Tri::Unknown) ++out.undecided;
    }
  return out;
}

}  // namespace pfl
