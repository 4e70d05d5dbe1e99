#include "doctest.h"

#include "pfl/error.hpp"
#include "pfl/linkage/linkage.hpp"

using namespace pfl;

namespace {

const LaurentCtx kInf3(3, Orientation::AtInfinity);
const LaurentCtx kZero3(3, Orientation::AtZero);

using PQ = PfisterQuad<RatFunc>;
using PB = PfisterBilin<RatFunc>;

RatFunc x(int i) { return kInf3.var(i - 1); }

void require_report_sound(const LinkageReport& r, const PQ& phi, const PQ& psi) {
  for (const auto* f : {&r.separable, &r.inseparable, &r.total_separable, &r.total_inseparable}) {
    if (!f->witness) continue;
    std::string why;
    const bool ok = verify_entry(*f->witness, phi, psi, kInf3, &why);
    INFO(f->witness->form, " ", why);
    REQUIRE(ok);
  }
}

}  // namespace

TEST_CASE("three-valued connectives") {
  CHECK(tri_and(Tri::Yes, Tri::Unknown) == Tri::Unknown);
  CHECK(tri_and(Tri::No, Tri::Unknown) == Tri::No);
  CHECK(tri_or(Tri::Yes, Tri::Unknown) == Tri::Yes);
  CHECK(tri_or(Tri::No, Tri::Unknown) == Tri::Unknown);
  CHECK(tri_not(Tri::Unknown) == Tri::Unknown);
  CHECK(std::string(to_string(Tri::Unknown)) == "INCONCLUSIVE");
}

TEST_CASE("slot families") {
  auto fam = SlotFamily::parse("monomials:x1,x3", kInf3);
  CHECK(fam.generators.size() == 3);
  CHECK(fam.as_candidates.size() == 3);
  CHECK(fam.description == "monomials:x1,x3");
  CHECK_THROWS_AS(SlotFamily::parse("monomials:x4", kInf3), Error);
  CHECK_THROWS_AS(SlotFamily::parse("binomials:x1", kInf3), Error);
  CHECK_THROWS_AS(SlotFamily::parse("monomials:", kInf3), Error);
  const size_t before = fam.as_candidates.size();
  fam.add_common_slot_closure(x(1), x(2), x(3));
  CHECK(fam.as_candidates.size() == before + 2);
}

TEST_CASE("bilinear factor examples") {
  const PQ phi({x(1)}, x(1) * x(2));
  auto yes = is_bilin_factor(PB(kInf3.one(), {x(1)}), phi, kInf3);
  CHECK(yes.verdict == Tri::Yes);
  CHECK(yes.syntactic);
  auto no = is_bilin_factor(PB(kInf3.one(), {x(3)}), phi, kInf3);
  CHECK(no.verdict == Tri::No);
  CHECK(no.witt.upper < no.threshold);
  // Expanded at zero phi is hyperbolic and has every factor.
  const PQ phi0({kZero3.var(0)}, kZero3.var(0) * kZero3.var(1));
  CHECK(is_bilin_factor(PB(kZero3.one(), {kZero3.var(2)}), phi0, kZero3).verdict == Tri::Yes);
  CHECK_THROWS_AS(is_bilin_factor(PB(kInf3.one(), {x(1), x(2)}), phi, kInf3), Error);
}

TEST_CASE("quadratic factor examples") {
  const PQ phi({x(1)}, x(1) * x(2));
  CHECK(is_quad_factor(PQ({}, x(1) * x(2)), phi, kInf3).verdict == Tri::Yes);
  CHECK(is_quad_factor(PQ({}, x(2) * x(3)), phi, kInf3).verdict == Tri::No);
  CHECK(is_quad_factor(PQ({}, x(1).zero_like()), phi, kInf3).verdict == Tri::No);
  CHECK_THROWS_AS(is_quad_factor(PQ({x(1), x(2)}, x(3)), phi, kInf3), Error);
  // Same Artin-Schreier class as x1 x2.
  const RatFunc shifted = x(1) * x(2) + x(3) * x(3) + x(3);
  CHECK(is_quad_factor(PQ({}, shifted), phi, kInf3).verdict == Tri::Yes);
}

TEST_CASE("linked but not totally linked pair") {
  const PQ phi({x(1)}, x(1) * x(2)), psi({x(2)}, x(2) * x(3));
  const auto fam = SlotFamily::parse("monomials:x1,x2,x3", kInf3);
  CHECK(decide_hyperbolic(phi, kInf3).verdict == Verdict::Anisotropic);
  CHECK(decide_hyperbolic(psi, kInf3).verdict == Verdict::Anisotropic);
  auto r = linkage_report(phi, psi, 1, fam, kInf3);
  CHECK(r.family == "monomials:x1,x2,x3");
  REQUIRE(r.separable.value == Tri::Yes);
  REQUIRE(r.separable.witness);
  REQUIRE(r.total_separable.value == Tri::No);
  REQUIRE(r.total_separable.witness);
  CHECK(r.total_separable.witness->form == "qpf[[ ; x1*x2]]");
  CHECK(r.inseparable.value == Tri::Yes);

  require_report_sound(r, phi, psi);
}

TEST_CASE("report for equal forms and square-class variants") {
  const auto fam = SlotFamily::parse("monomials:x1,x2,x3", kInf3);
  const PQ phi({x(1)}, x(1) * x(2));
  auto same = linkage_report(phi, phi, 1, fam, kInf3);
  CHECK(same.separable.value == Tri::Yes);
  CHECK(same.inseparable.value == Tri::Yes);
  CHECK(same.total_separable.value == Tri::Yes);
  CHECK(same.total_inseparable.value == Tri::Yes);
  require_report_sound(same, phi, phi);

  const PQ variant({x(1) * x(3) * x(3)}, x(1) * x(2));
  auto v = linkage_report(phi, variant, 1, fam, kInf3);
  CHECK(v.separable.value == Tri::Yes);
  CHECK(v.inseparable.value == Tri::Yes);
  CHECK(v.total_separable.value == Tri::Yes);
  CHECK(v.total_inseparable.value == Tri::Yes);
  CHECK_THROWS_AS(linkage_report(phi, phi, 2, fam, kInf3), Error);
  CHECK_THROWS_AS(linkage_report(phi, PQ({}, x(1)), 1, fam, kInf3), Error);
}

TEST_CASE("enumerate factors") {
  const auto fam = SlotFamily::parse("monomials:x1,x2", kInf3);
  // At zero <<x1, x2]] is hyperbolic: every candidate divides it.
  const auto fam0 = SlotFamily::parse("monomials:x1,x2", kZero3);
  const PQ hyp({kZero3.var(0)}, kZero3.var(1));
  auto all = enumerate_factors(hyp, 1, fam0, kZero3);
  CHECK(all.quadratic.size() == quad_candidates({hyp}, 1, fam0, kZero3).size());
  CHECK(all.bilinear.size() == bilin_candidates({hyp}, 1, fam0, kZero3).size());

  const PQ phi({x(1)}, x(2));
  auto f = enumerate_factors(phi, 1, fam, kInf3);
  bool has_x2 = false;
  for (const auto& q : f.quadratic) has_x2 = has_x2 || describe(q.form) == "qpf[[ ; x2]]";
  CHECK(has_x2);

  SlotFamily zero_only;
  zero_only.description = "zero";
  zero_only.as_candidates = {x(1).zero_like()};
  const PQ single({}, x(1));
  auto g = enumerate_factors(single, 1, zero_only, kInf3);
  for (const auto& q : g.quadratic) CHECK(describe(q.form) != "qpf[[ ; 0]]");
  CHECK(g.quadratic.size() == 1);  // the form itself
}

TEST_CASE("common slot construction examples") {
  const auto fam = SlotFamily::parse("monomials:x1,x2,x3", kInf3);
  // beta = gamma: pi = omega and <<beta, beta, alpha]] is hyperbolic.
  const PQ pi({x(2)}, x(1) * x(3));
  auto same = check_prop33(pi, pi, kInf3, fam);
  CHECK(same.conclusion.verdict == Verdict::Hyperbolic);
  CHECK(same.conclusion_checked);
  CHECK(verify_lagrangian(PQ({x(2), x(2)}, x(1) * x(3)).expand(), same.conclusion.lagrangian,
                          static_cast<int>(same.conclusion.lagrangian.size())));
  REQUIRE(same.inseparable_witness);

  // alpha = beta = gamma gives t = alpha and t^2 gamma + beta = alpha^3 + alpha.
  const PQ deg({x(1)}, x(1));
  auto d = check_prop33(deg, deg, kInf3, fam);
  CHECK_FALSE(d.degenerate);
  CHECK(d.t == x(1));
  CHECK(d.slot == x(1) * x(1) * x(1) + x(1));

  CHECK_THROWS_AS(check_prop33(pi, PQ({x(3)}, x(2)), kInf3, fam), Error);
  CHECK_THROWS_AS(check_prop33(PQ({}, x(1)), PQ({}, x(1)), kInf3, fam), Error);
}

TEST_CASE("degenerate common slot") {
  // t^2 gamma + beta = 0 needs gamma = beta / t^2 with t = alpha + (alpha + beta) / gamma.
  // alpha = 0: t = beta / gamma, t^2 gamma = beta^2 / gamma, zero sum iff gamma = beta.
  const auto fam = SlotFamily::parse("monomials:x1,x2", kInf3);
  const PQ pi({x(1)}, x(1).zero_like());
  auto r = check_prop33(pi, pi, kInf3, fam);
  CHECK(r.degenerate);
  CHECK(r.slot.is_zero());
  CHECK(r.conclusion.verdict == Verdict::Hyperbolic);
}

TEST_CASE("inseparable linkage implies separable linkage") {
  const auto fam = SlotFamily::parse("monomials:x1,x2,x3", kInf3);
  const auto gens = fam.generator_values(kInf3);
  int both_decided = 0;
  for (size_t i = 0; i < gens.size(); i += 2)
    for (size_t j = 0; j < gens.size(); ++j) {
      const PQ phi({gens[i]}, gens[(i + 3) % gens.size()]);
      const PQ psi({gens[j]}, gens[(j + 5) % gens.size()]);
      auto r = linkage_report(phi, psi, 1, fam, kInf3);
      require_report_sound(r, phi, psi);
      if (r.inseparable.value == Tri::Yes) {
        CHECK(r.separable.value != Tri::No);
        both_decided += r.separable.value == Tri::Yes;
      }
    }
  CHECK(both_decided > 0);
}

TEST_CASE("factor sets only grow with the family") {
  const auto small = SlotFamily::parse("monomials:x1,x2", kInf3);
  const auto big = SlotFamily::parse("monomials:x1,x2,x3", kInf3);
  for (const PQ& phi : {PQ({x(1)}, x(1) * x(2)), PQ({x(2)}, x(2) * x(3)), PQ({x(1) * x(3)}, x(2))}) {
    auto a = enumerate_factors(phi, 1, small, kInf3);
    auto b = enumerate_factors(phi, 1, big, kInf3);
    for (const auto& q : a.quadratic) {
      bool found = false;
      for (const auto& r : b.quadratic) found = found || describe(r.form) == describe(q.form);
      CHECK_MESSAGE(found, describe(q.form));
    }
    for (const auto& q : a.bilinear) {
      bool found = false;
      for (const auto& r : b.bilinear) found = found || describe(r.form) == describe(q.form);
      CHECK_MESSAGE(found, describe(q.form));
    }
  }
}

TEST_CASE("totally separably 1-linked pairs are inseparably linked") {
  // Sample of the full sweep: alpha = x1*x2*x3 and alpha = x2.
  const auto base = SlotFamily::parse("monomials:x1,x2,x3", kInf3);
  const auto gens = base.generator_values(kInf3);
  int total = 0;
  for (const RatFunc& alpha : {x(1) * x(2) * x(3), x(2)})
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = i + 1; j < gens.size(); ++j) {
        const PQ pi({gens[i]}, alpha), omega({gens[j]}, alpha);
        auto fam = base;
        fam.add_common_slot_closure(alpha, gens[i], gens[j]);
        auto r = linkage_report(pi, omega, 1, fam, kInf3);
        require_report_sound(r, pi, omega);
        if (r.separable.value != Tri::Yes || r.total_separable.value != Tri::Yes) continue;
        ++total;
        auto p = check_prop33(pi, omega, kInf3, fam);
        CHECK(p.conclusion.verdict == Verdict::Hyperbolic);
        REQUIRE(p.inseparable_witness);
        std::string why;
        CHECK(verify_entry(*p.inseparable_witness, pi, omega, kInf3, &why));
      }
  CHECK(total > 0);
}
