#include "pfl/error.hpp"
#include "pfl/linkage/linkage.hpp"

namespace pfl {

Prop33Result check_prop33(const PfisterQuad<RatFunc>& pi, const PfisterQuad<RatFunc>& omega, const LaurentCtx& ctx,
                          const SlotFamily& family, const SearchParams& params) {
  if (pi.fold() != omega.fold() || pi.fold() < 2)
    throw Error(ErrorKind::FoldMismatch, "need two n-fold forms with n >= 2");
  if (!(pi.as_slot == omega.as_slot)) throw Error(ErrorKind::InvalidArgument, "forms must share the Artin-Schreier slot");
  // The single position where the bilinear slots differ carries beta / gamma; default to the last.
  const size_t k = pi.bilin_slots.size();
  size_t diff = k - 1;
  int differing = 0;
  for (size_t i = 0; i < k; ++i)
    if (!(pi.bilin_slots[i] == omega.bilin_slots[i])) {
      diff = i;
      ++differing;
    }
  if (differing > 1) throw Error(ErrorKind::InvalidArgument, "forms must share all but one bilinear slot");

  const RatFunc& alpha = pi.as_slot;
  const RatFunc& beta = pi.bilin_slots[diff];
  const RatFunc& gamma = omega.bilin_slots[diff];
  std::vector<RatFunc> deltas;
  for (size_t i = 0; i < k; ++i)
    if (i != diff) deltas.push_back(pi.bilin_slots[i]);

  Prop33Result r;
  r.t = alpha + (alpha + beta) / gamma;
  r.slot = r.t * r.t * gamma + beta;
  std::vector<RatFunc> big = {beta, gamma};
  big.insert(big.end(), deltas.begin(), deltas.end());
  const PfisterQuad<RatFunc> conclusion_form(big, alpha);

  if (r.slot.is_zero()) {
    r.degenerate = true;
  } else {
    r.hypothesis = is_quad_factor(PfisterQuad<RatFunc>({}, r.slot), pi, ctx, params);
    if (r.hypothesis.verdict == Tri::Unknown)
      throw Error(ErrorKind::HypothesisNotEstablished, "factor test for the hypothesis slot is undecided");
  }
  const bool hypothesis = r.degenerate || r.hypothesis.verdict == Tri::Yes;

  // Evaluated either way; only a failure under the hypothesis is a contradiction.
  r.conclusion = decide_hyperbolic(conclusion_form, ctx, params);
  if (hypothesis && r.conclusion.verdict == Verdict::Anisotropic)
    throw Error(ErrorKind::IdentityFailed, "hypothesis holds but the conclusion form is anisotropic");
  r.conclusion_checked = r.conclusion.verdict == Verdict::Hyperbolic;
  if (!hypothesis && !r.conclusion_checked) return r;

  // Inseparable witness: (n-1)-fold bilinear factor of both forms.
  std::vector<BilinCandidate> cands;
  const RatFunc one = ctx.one();
  for (const RatFunc& b : {beta, gamma, beta * gamma}) {
    std::vector<RatFunc> s = deltas;
    s.push_back(b);
    cands.push_back({PfisterBilin<RatFunc>(one, s), "slots"});
  }
  for (auto& c : bilin_candidates({pi, omega}, pi.fold() - 1, family, ctx)) cands.push_back(c);
  for (const auto& c : cands) {
    FactorVerdict a = is_bilin_factor(c.form, pi, ctx, params);
    if (a.verdict != Tri::Yes) continue;
    FactorVerdict b = is_bilin_factor(c.form, omega, ctx, params);
    if (b.verdict != Tri::Yes) continue;
    r.inseparable_witness = FactorEntry{describe(c.form), c.origin, a, b, std::nullopt, c.form};
    break;
  }
  return r;
}

}  // namespace pfl
