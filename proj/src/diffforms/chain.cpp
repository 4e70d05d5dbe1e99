#include "pfl/diffforms/chain.hpp"

#include "pfl/error.hpp"

namespace pfl {

bool ChainReport::all_hold() const {
  for (const auto& s : steps)
    if (!s.holds) return false;
  return true;
}

namespace {

std::vector<std::string> chain_names(int delta_slots) {
  std::vector<std::string> names{"alpha", "beta", "gamma"};
  for (int i = 1; i <= delta_slots; ++i) names.push_back("delta" + std::to_string(i));
  return names;
}

}  // namespace

ChainReport verify_prop32_chain(uint32_t p, int delta_slots) {
  if (delta_slots < 0 || 3 + delta_slots > kMaxVars)
    throw Error(ErrorKind::InvalidArgument, "delta slot count out of range");
  const int n = 3 + delta_slots;
  const auto names = chain_names(delta_slots);
  RatFunc alpha = RatFunc::variable(p, n, 0), beta = RatFunc::variable(p, n, 1), gamma = RatFunc::variable(p, n, 2);
  RatFunc t = alpha + (alpha - beta) / gamma;
  RatFunc tp = t.pow(p);
  RatFunc v = tp * gamma + beta;

  ChainReport report;
  report.p = p;
  report.delta_slots = delta_slots;
  report.degenerate_branch = v.is_zero();
  if (report.degenerate_branch) {
    // d gamma ^ d beta = 0 then makes the target vanish; record it as the only step.
    ChainStep s{"degenerate", "t^p gamma + beta = 0 implies dgamma ^ dbeta = 0", "", "", false};
    DiffForm lhs = wedge(d(gamma), d(beta));
    s.lhs = lhs.to_string(names);
    s.rhs = "0";
    s.holds = lhs.is_zero();
    report.steps.push_back(s);
    if (!s.holds) throw Error(ErrorKind::IdentityFailed, "degenerate");
    return report;
  }

  DiffForm delta = DiffForm::function(RatFunc::constant(p, n, 1));
  for (int i = 0; i < delta_slots; ++i) delta = wedge(delta, dlog(RatFunc::variable(p, n, 3 + i)));
  auto with_delta = [&](const DiffForm& w) { return wedge(delta, w); };

  auto record = [&](std::string label, std::string statement, const DiffForm& lhs, const DiffForm& rhs) {
    ChainStep s{std::move(label), std::move(statement), lhs.to_string(names), rhs.to_string(names), lhs == rhs};
    report.steps.push_back(s);
    if (!s.holds) throw Error(ErrorKind::IdentityFailed, report.steps.back().label);
  };

  DiffForm dl_beta = dlog(beta), dl_gamma = dlog(gamma), dl_v = dlog(v);
  DiffForm dl_ratio = dlog(beta / gamma);

  record("i", "alpha dlog(beta) ^ dlog(gamma) = alpha dlog(beta/gamma) ^ dlog(v)",
         with_delta(wedge(dl_beta, dl_gamma).scaled(alpha)), with_delta(wedge(dl_ratio, dl_v).scaled(alpha)));
  record("ii.a", "dlog(beta/gamma) = dlog(beta) - dlog(gamma)", dl_ratio, dl_beta - dl_gamma);
  record("ii.b", "alpha dlog(beta/gamma) ^ dlog(v) = alpha dlog(beta) ^ dlog(v) - alpha dlog(gamma) ^ dlog(v)",
         with_delta(wedge(dl_ratio, dl_v).scaled(alpha)),
         with_delta(wedge(dl_beta, dl_v).scaled(alpha)) - with_delta(wedge(dl_gamma, dl_v).scaled(alpha)));
  record("iii", "v dlog(v) = dv", with_delta(dl_v.scaled(v)), with_delta(d(v)));
  record("iv", "d(t^p) = 0", with_delta(d(tp)), with_delta(DiffForm(p, n, 1)));
  return report;
}

TrivialityCertificate factor_witness_certificate(const RatFunc& v, const SymbolExpr& tau) {
  if (tau.as_slot) throw Error(ErrorKind::InvalidArgument, "tau must be a logarithmic symbol");
  if (v.is_zero()) throw Error(ErrorKind::ZeroArgument, "factor must be nonzero");
  const uint32_t p = v.characteristic();
  const int n = v.nvars();
  DiffForm tau_form = tau.expand(p, n);
  DiffForm target = wedge(tau_form.scaled(v), dlog(v));
  // v tau ^ dv/v = tau ^ dv = (-1)^deg(tau) dv ^ tau = (-1)^deg(tau) d(v tau).
  DiffForm exact = tau_form.scaled(v);
  if (tau_form.degree() % 2) exact = -exact;
  return TrivialityCertificate{exact, SymbolSum{}, target};
}

}  // namespace pfl
