#include <algorithm>
#include <functional>
#include <set>

#include "pfl/error.hpp"
#include "pfl/linkage/linkage.hpp"

namespace pfl {

const char* to_string(Tri t) {
  switch (t) {
    case Tri::No: return "false";
    case Tri::Yes: return "true";
    case Tri::Unknown: return "INCONCLUSIVE";
  }
  return "?";
}

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::No || b == Tri::No) return Tri::No;
  if (a == Tri::Yes && b == Tri::Yes) return Tri::Yes;
  return Tri::Unknown;
}
Tri tri_or(Tri a, Tri b) { return tri_not(tri_and(tri_not(a), tri_not(b))); }
Tri tri_not(Tri a) { return a == Tri::Yes ? Tri::No : a == Tri::No ? Tri::Yes : Tri::Unknown; }

namespace {

std::vector<std::string> var_names(int m) {
  std::vector<std::string> n;
  for (int i = 0; i < m; ++i) n.push_back("x" + std::to_string(i + 1));
  return n;
}

std::string show(const RatFunc& f) { return f.to_string(var_names(f.nvars())); }

bool same_square_class(const RatFunc& a, const RatFunc& b) {
  RatFunc r;
  return ratfunc_sqrt(a / b, &r);
}

// Every slot of `sub` matches a distinct slot of `super` up to squares.
bool slots_contained(const std::vector<RatFunc>& sub, const std::vector<RatFunc>& super) {
  std::vector<bool> used(super.size(), false);
  for (const auto& s : sub) {
    bool found = false;
    for (size_t k = 0; k < super.size() && !found; ++k)
      if (!used[k] && same_square_class(s, super[k])) used[k] = found = true;
    if (!found) return false;
  }
  return true;
}

Tri from_bounds(const LaurentWitt& w, int threshold) {
  if (w.lower >= threshold) return Tri::Yes;
  if (w.upper < threshold) return Tri::No;
  return Tri::Unknown;
}

FactorVerdict run_test(const QForm<RatFunc>& tested, int threshold, bool syntactic, const LaurentCtx& ctx,
                       const SearchParams& params) {
  FactorVerdict v;
  v.threshold = threshold;
  v.syntactic = syntactic;
  v.witt = witt_index_laurent(tested, ctx, params);
  std::string why;
  if (!verify_witt(tested, ctx, v.witt, &why)) throw Error(ErrorKind::IdentityFailed, "factor witness re-check: " + why);
  const Tri model = from_bounds(v.witt, threshold);
  if (syntactic && model == Tri::No)
    throw Error(ErrorKind::IdentityFailed, "syntactic factor refuted by an anisotropy certificate");
  v.verdict = syntactic ? Tri::Yes : model;
  v.reason = "i_W in [" + std::to_string(v.witt.lower) + ", " + std::to_string(v.witt.upper) + "], threshold " +
             std::to_string(threshold) + (syntactic ? "; syntactic factor" : "");
  return v;
}

}  // namespace

std::string describe(const PfisterQuad<RatFunc>& f) {
  std::string s = "qpf[[";
  for (size_t i = 0; i < f.bilin_slots.size(); ++i) s += (i ? ", " : "") + show(f.bilin_slots[i]);
  return s + " ; " + show(f.as_slot) + "]]";
}

std::string describe(const PfisterBilin<RatFunc>& f) {
  std::string s = "bpf<<";
  for (size_t i = 0; i < f.slots.size(); ++i) s += (i ? ", " : "") + show(f.slots[i]);
  return s + ">>";
}

SlotFamily SlotFamily::monomials(const LaurentCtx& ctx, const std::vector<int>& vars) {
  SlotFamily fam;
  fam.description = "monomials:";
  for (size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] < 1 || vars[i] > ctx.m) throw Error(ErrorKind::InvalidArgument, "family variable outside the tower");
    fam.description += (i ? ",x" : "x") + std::to_string(vars[i]);
  }
  for (unsigned mask = 1; mask < (1u << vars.size()); ++mask) {
    MonomialSlot s{std::vector<int>(ctx.m, 0)};
    for (size_t i = 0; i < vars.size(); ++i)
      if (mask >> i & 1) s.exponents[vars[i] - 1] = 1;
    fam.generators.push_back(s);
    fam.as_candidates.push_back(s.value(ctx));
  }
  return fam;
}

SlotFamily SlotFamily::parse(const std::string& spec, const LaurentCtx& ctx) {
  const std::string prefix = "monomials:";
  if (spec.rfind(prefix, 0) != 0) throw Error(ErrorKind::ParseError, "family must look like monomials:x1,x2");
  std::vector<int> vars;
  size_t pos = prefix.size();
  while (pos < spec.size()) {
    size_t end = spec.find(',', pos);
    if (end == std::string::npos) end = spec.size();
    const std::string tok = spec.substr(pos, end - pos);
    if (tok.size() < 2 || tok[0] != 'x' || !std::all_of(tok.begin() + 1, tok.end(), ::isdigit))
      throw Error(ErrorKind::ParseError, "bad family variable '" + tok + "'");
    vars.push_back(std::stoi(tok.substr(1)));
    pos = end + 1;
  }
  if (vars.empty()) throw Error(ErrorKind::ParseError, "empty family");
  return monomials(ctx, vars);
}

void SlotFamily::add_common_slot_closure(const RatFunc& alpha, const RatFunc& beta, const RatFunc& gamma) {
  auto add = [this](const RatFunc& s) {
    if (s.is_zero()) return;
    if (std::find(as_candidates.begin(), as_candidates.end(), s) == as_candidates.end()) as_candidates.push_back(s);
  };
  const RatFunc t1 = alpha + (alpha + beta) / gamma;
  add(t1 * t1 * gamma + beta);
  const RatFunc t2 = alpha + (alpha + gamma) / beta;
  add(t2 * t2 * beta + gamma);
}

std::vector<RatFunc> SlotFamily::generator_values(const LaurentCtx& ctx) const {
  std::vector<RatFunc> out;
  for (const auto& g : generators) out.push_back(g.value(ctx));
  return out;
}

FactorVerdict is_quad_factor(const PfisterQuad<RatFunc>& psi, const PfisterQuad<RatFunc>& phi, const LaurentCtx& ctx,
                             const SearchParams& params) {
  if (psi.fold() > phi.fold()) throw Error(ErrorKind::FoldMismatch, "candidate factor has larger fold");
  const bool syntactic = psi.as_slot == phi.as_slot && slots_contained(psi.bilin_slots, phi.bilin_slots);
  return run_test(orthogonal_sum(phi.expand(), psi.expand()), 1 << psi.fold(), syntactic, ctx, params);
}

FactorVerdict is_bilin_factor(const PfisterBilin<RatFunc>& B, const PfisterQuad<RatFunc>& phi, const LaurentCtx& ctx,
                              const SearchParams& params) {
  if (B.fold() >= phi.fold()) throw Error(ErrorKind::FoldMismatch, "bilinear factor must have smaller fold");
  const bool syntactic = slots_contained(B.slots, phi.bilin_slots);
  return run_test(orthogonal_sum(phi.expand(), q_of_bilinear(B.expand())), 1 << B.fold(), syntactic, ctx, params);
}

bool verify_factor(const FactorVerdict& v, const QForm<RatFunc>& tested, const LaurentCtx& ctx, std::string* why) {
  if (!verify_witt(tested, ctx, v.witt, why)) return false;
  switch (v.verdict) {
    case Tri::Yes:
      if (v.witt.lower >= v.threshold || v.syntactic) return true;
      break;
    case Tri::No:
      if (v.witt.decided() && v.witt.upper < v.threshold) return true;
      break;
    case Tri::Unknown:
      return true;
  }
  if (why) *why = "verdict not supported by the Witt index bounds";
  return false;
}

namespace {

void combinations(size_t n, size_t k, const std::function<void(const std::vector<size_t>&)>& f) {
  std::vector<size_t> idx;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (idx.size() == k) {
      f(idx);
      return;
    }
    for (size_t i = start; i < n; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<QuadCandidate> quad_candidates(const std::vector<PfisterQuad<RatFunc>>& inputs, int m,
                                           const SlotFamily& family, const LaurentCtx& ctx) {
  std::vector<QuadCandidate> out;
  std::set<std::string> seen;
  auto push = [&](std::vector<RatFunc> slots, const RatFunc& as, const std::string& origin) {
    PfisterQuad<RatFunc> f(std::move(slots), as);
    if (seen.insert(describe(f)).second) out.push_back({f, origin});
  };
  for (const auto& in : inputs)
    if (m - 1 <= static_cast<int>(in.bilin_slots.size()))
      combinations(in.bilin_slots.size(), m - 1, [&](const std::vector<size_t>& idx) {
        std::vector<RatFunc> s;
        for (auto i : idx) s.push_back(in.bilin_slots[i]);
        push(s, in.as_slot, "syntactic");
      });
  const auto gens = family.generator_values(ctx);
  for (const auto& c : family.as_candidates)
    combinations(gens.size(), m - 1, [&](const std::vector<size_t>& idx) {
      std::vector<RatFunc> s;
      for (auto i : idx) s.push_back(gens[i]);
      push(s, c, "family");
    });
  return out;
}

std::vector<BilinCandidate> bilin_candidates(const std::vector<PfisterQuad<RatFunc>>& inputs, int m,
                                             const SlotFamily& family, const LaurentCtx& ctx) {
  std::vector<BilinCandidate> out;
  std::set<std::string> seen;
  const RatFunc one = ctx.one();
  auto push = [&](std::vector<RatFunc> slots, const std::string& origin) {
    PfisterBilin<RatFunc> f(one, std::move(slots));
    if (seen.insert(describe(f)).second) out.push_back({f, origin});
  };
  for (const auto& in : inputs)
    if (m <= static_cast<int>(in.bilin_slots.size()))
      combinations(in.bilin_slots.size(), m, [&](const std::vector<size_t>& idx) {
        std::vector<RatFunc> s;
        for (auto i : idx) s.push_back(in.bilin_slots[i]);
        push(s, "syntactic");
      });
  const auto gens = family.generator_values(ctx);
  combinations(gens.size(), m, [&](const std::vector<size_t>& idx) {
    std::vector<RatFunc> s;
    for (auto i : idx) s.push_back(gens[i]);
    push(s, "family");
  });
  return out;
}

}  // namespace pfl
