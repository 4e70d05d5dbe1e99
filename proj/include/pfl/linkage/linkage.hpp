#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfl/laurent/engine.hpp"

namespace pfl {

/// Three-valued answers: an undecided model verdict never turns into "false".
enum class Tri { No, Yes, Unknown };
const char* to_string(Tri t);
Tri tri_and(Tri a, Tri b);
Tri tri_or(Tri a, Tri b);
Tri tri_not(Tri a);

/// Finite family of candidate slots. Bilinear generators are kept as exponent vectors reduced mod 2
/// (square classes); Artin-Schreier candidates are kept verbatim.
struct SlotFamily {
  std::vector<MonomialSlot> generators;
  std::vector<RatFunc> as_candidates;
  std::string description;

  /// Every product of a nonempty subset of the variables named in `vars` (1-based), as both
  /// bilinear generators and Artin-Schreier candidates.
  static SlotFamily monomials(const LaurentCtx& ctx, const std::vector<int>& vars);
  /// "monomials:x1,x2,x3".
  static SlotFamily parse(const std::string& spec, const LaurentCtx& ctx);

  /// Adds t^2 gamma + beta and t^2 beta + gamma with t = alpha + (alpha + beta)/gamma (resp. with
  /// beta and gamma swapped) for the given slots, when nonzero and new.
  void add_common_slot_closure(const RatFunc& alpha, const RatFunc& beta, const RatFunc& gamma);

  std::vector<RatFunc> generator_values(const LaurentCtx& ctx) const;
};

/// Outcome of a factor test with the evidence behind it.
struct FactorVerdict {
  Tri verdict = Tri::Unknown;
  int threshold = 0;  // 2^m
  std::string reason;
  LaurentWitt witt;  // for phi _|_ candidate (or phi _|_ Q(B))
  bool syntactic = false;
};

/// psi (m-fold quadratic) divides phi (n-fold) iff i_W(phi _|_ psi) >= 2^m.
FactorVerdict is_quad_factor(const PfisterQuad<RatFunc>& psi, const PfisterQuad<RatFunc>& phi, const LaurentCtx& ctx,
                             const SearchParams& params = {});
/// B (m-fold bilinear, m < n) divides phi iff i_W(phi _|_ Q(B)) >= 2^m. FoldMismatch when m >= n.
FactorVerdict is_bilin_factor(const PfisterBilin<RatFunc>& B, const PfisterQuad<RatFunc>& phi, const LaurentCtx& ctx,
                              const SearchParams& params = {});

/// Independent re-check of a factor verdict: witnesses re-evaluated, threshold compared.
bool verify_factor(const FactorVerdict& v, const QForm<RatFunc>& tested_form, const LaurentCtx& ctx, std::string* why);

struct QuadCandidate {
  PfisterQuad<RatFunc> form;
  std::string origin;  // "syntactic", "family", "solver"
};
struct BilinCandidate {
  PfisterBilin<RatFunc> form;
  std::string origin;
};

/// m-fold candidates in deterministic order: syntactic sub-forms of the inputs, then the family.
std::vector<QuadCandidate> quad_candidates(const std::vector<PfisterQuad<RatFunc>>& inputs, int m,
                                           const SlotFamily& family, const LaurentCtx& ctx);
std::vector<BilinCandidate> bilin_candidates(const std::vector<PfisterQuad<RatFunc>>& inputs, int m,
                                             const SlotFamily& family, const LaurentCtx& ctx);

/// Common 1-fold slots c = s + sum a_S w_S^2 = s' + sum b_T v_T^2 (mod the Artin-Schreier image)
/// with w, v sums of window monomials: GF(2) elimination on Artin-Schreier classes.
std::vector<RatFunc> solve_common_slots(const PfisterQuad<RatFunc>& phi, const PfisterQuad<RatFunc>& psi,
                                        const LaurentCtx& ctx, int window);

struct FactorEntry {
  std::string form;
  std::string origin;
  FactorVerdict on_phi;
  FactorVerdict on_psi;
  std::optional<PfisterQuad<RatFunc>> quad;  // exactly one of these is set
  std::optional<PfisterBilin<RatFunc>> bilin;
};

/// Rebuilds phi _|_ candidate and psi _|_ candidate and re-checks both verdicts.
bool verify_entry(const FactorEntry& e, const PfisterQuad<RatFunc>& phi, const PfisterQuad<RatFunc>& psi,
                  const LaurentCtx& ctx, std::string* why);

struct LinkageField {
  Tri value = Tri::Unknown;
  std::optional<FactorEntry> witness;  // common factor, or first discrepancy for total fields
  std::string note;
};

struct LinkageReport {
  int m = 1;
  std::string family;
  std::string model;
  LinkageField separable;
  LinkageField inseparable;
  LinkageField total_separable;
  LinkageField total_inseparable;
  /// i_W(phi _|_ psi). A common m-fold factor of either kind forces i_W >= 2^m, so the existence
  /// fields read "false" only when the upper bound is below 2^m.
  LaurentWitt sum_index;
};

LinkageReport linkage_report(const PfisterQuad<RatFunc>& phi, const PfisterQuad<RatFunc>& psi, int m,
                             const SlotFamily& family, const LaurentCtx& ctx, const SearchParams& params = {});

/// Factors from the candidate lists that pass the tests (Yes verdicts only), in candidate order.
struct FactorSet {
  std::vector<QuadCandidate> quadratic;
  std::vector<BilinCandidate> bilinear;
  int undecided = 0;
};
FactorSet enumerate_factors(const PfisterQuad<RatFunc>& phi, int m, const SlotFamily& family, const LaurentCtx& ctx,
                            const SearchParams& params = {});

struct Prop33Result {
  RatFunc t, slot;
  bool degenerate = false;  // slot == 0: the d(gamma) ^ d(beta) = 0 branch
  FactorVerdict hypothesis;  // <<slot]] divides pi
  HyperbolicityVerdict conclusion;  // <<beta, gamma, delta..., alpha]]
  bool conclusion_checked = false;
  std::optional<FactorEntry> inseparable_witness;  // common (n-1)-fold bilinear factor of pi, omega
};

/// pi = <<delta..., beta, alpha]], omega = <<delta..., gamma, alpha]]. The conclusion form is always
/// decided; a contradiction is raised only when the hypothesis holds. HypothesisNotEstablished when
/// the factor test for the hypothesis is undecided.
Prop33Result check_prop33(const PfisterQuad<RatFunc>& pi, const PfisterQuad<RatFunc>& omega, const LaurentCtx& ctx,
                          const SlotFamily& family, const SearchParams& params = {});

std::string describe(const PfisterQuad<RatFunc>& f);
std::string describe(const PfisterBilin<RatFunc>& f);

}  // namespace pfl
