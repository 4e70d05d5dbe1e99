#pragma once

#include <string>
#include <vector>

#include "pfl/laurent/laurent_ctx.hpp"
#include "pfl/quadform/forms.hpp"

namespace pfl {

/// Residue forms of a form over k((t)): basis vectors are weighted by half their value's t-valuation,
/// vectors of integral weight feed `unit`, the others feed `twisted`. A block [a,b] keeps its cross
/// term only when v(a) + v(b) = 0; otherwise its two vectors become quasilinear entries.
struct ResidueForms {
  QForm<RatFunc> unit;
  QForm<RatFunc> twisted;
};

/// Graded residues with respect to t_var (t-coordinates). Requires nonzero quasilinear entries
/// and v(a) + v(b) <= 0 on every block (UnsupportedSlot otherwise).
ResidueForms graded_residues(const QForm<RatFunc>& phi, int var);

/// Model-level split in x-coordinates: phi ~ phi_unit _|_ x_m phi_twisted with residue forms over
/// the tower without x_m. Blocks that are isotropic (a zero entry, or ab in the Artin-Schreier
/// image) are reported as H in the unit part.
ResidueForms residue_split(const QForm<RatFunc>& phi, const LaurentCtx& ctx);

/// Certificate that a form over F_2((t_1))...((t_levels)) (t-coordinates) is anisotropic: at every
/// level both residue forms must be anisotropic, down to F_2 where this is settled by enumeration.
struct ResidueTrace {
  bool anisotropic = false;
  std::vector<std::string> lines;
};

ResidueTrace certify_anisotropic(const QForm<RatFunc>& phi, int levels);

}  // namespace pfl
