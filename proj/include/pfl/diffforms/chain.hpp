#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pfl/diffforms/diff_form.hpp"

namespace pfl {

struct ChainStep {
  std::string label;
  std::string statement;
  std::string lhs;
  std::string rhs;
  bool holds = false;
};

struct ChainReport {
  uint32_t p = 0;
  int delta_slots = 0;
  /// Whether t^p gamma + beta vanished (then d gamma ^ d beta = 0 closes the argument).
  bool degenerate_branch = false;
  std::vector<ChainStep> steps;
  bool all_hold() const;
};

/// Checks the identity chain over F_p(alpha, beta, gamma, delta_1..delta_k) with fresh
/// variables x1 = alpha, x2 = beta, x3 = gamma, x{3+i} = delta_i. Every identity is wedged on
/// the left with dlog(delta_1) ^ ... ^ dlog(delta_k). IdentityFailed if any step fails.
ChainReport verify_prop32_chain(uint32_t p, int delta_slots);

/// Given v != 0 and a logarithmic symbol tau (no AS slot), the certificate showing that
/// v * tau ^ dlog(v) is exact: it equals d(+-v * tau) because tau is closed.
TrivialityCertificate factor_witness_certificate(const RatFunc& v, const SymbolExpr& tau);

}  // namespace pfl
