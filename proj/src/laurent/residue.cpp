#include "pfl/laurent/residue.hpp"

#include "pfl/error.hpp"
#include "pfl/laurent/artin_schreier.hpp"

namespace pfl {
namespace {

int parity(int v) { return ((v % 2) + 2) % 2; }

std::string indent(int depth) { return std::string(2 * depth, ' '); }

std::string shape(const QForm<RatFunc>& q) {
  return std::to_string(q.blocks.size()) + " block(s), " + std::to_string(q.quasi.size()) + " quasilinear";
}

// Over F_2: every entry is 0 or 1.
bool anisotropic_over_f2(const QForm<RatFunc>& q, std::string* why) {
  const int n = q.dim();
  if (n > 24) {
    *why = "base form too large to enumerate";
    return false;
  }
  std::vector<int> coef;
  auto bit = [](const RatFunc& c) { return c.is_zero() ? 0 : 1; };
  for (const auto& [a, b] : q.blocks) {
    coef.push_back(bit(a));
    coef.push_back(bit(b));
  }
  for (const auto& c : q.quasi) coef.push_back(bit(c));
  const size_t nb = q.blocks.size();
  for (uint32_t v = 1; v < (1u << n); ++v) {
    int acc = 0;
    for (int i = 0; i < n; ++i)
      if (v >> i & 1) acc ^= coef[i];
    for (size_t k = 0; k < nb; ++k) acc ^= (v >> (2 * k) & 1) & (v >> (2 * k + 1) & 1);
    if (!acc) {
      *why = "zero of the base form at mask " + std::to_string(v);
      return false;
    }
  }
  return true;
}

bool certify(const QForm<RatFunc>& q, int levels, int depth, std::vector<std::string>* lines) {
  if (q.dim() == 0) return true;
  if (levels == 0) {
    std::string why;
    const bool ok = anisotropic_over_f2(q, &why);
    lines->push_back(indent(depth) + "F_2: " + shape(q) + (ok ? ", no zero among all nonzero vectors" : ", " + why));
    return ok;
  }
  const int var = levels - 1;
  const std::string name = "t" + std::to_string(levels);
  for (const auto& [a, b] : q.blocks) {
    if (a.is_zero() || b.is_zero()) {
      lines->push_back(indent(depth) + name + ": block with a zero entry is isotropic");
      return false;
    }
    WpSplit w = wp_split(a * b, levels);
    if (w.trivial) {
      lines->push_back(indent(depth) + name + ": block [" + a.to_string() + ", " + b.to_string() +
                       "] is isotropic (product in the Artin-Schreier image)");
      return false;
    }
  }
  for (const auto& c : q.quasi)
    if (c.is_zero()) {
      lines->push_back(indent(depth) + name + ": zero quasilinear entry");
      return false;
    }
  ResidueForms r = graded_residues(q, var);
  lines->push_back(indent(depth) + name + ": " + shape(q) + " -> integral weights: " + shape(r.unit) +
                   "; half-integral weights: " + shape(r.twisted));
  return certify(r.unit, levels - 1, depth + 1, lines) && certify(r.twisted, levels - 1, depth + 1, lines);
}

}  // namespace

ResidueForms graded_residues(const QForm<RatFunc>& phi, int var) {
  ResidueForms r{QForm<RatFunc>(phi.unit), QForm<RatFunc>(phi.unit)};
  auto part = [&r](int v) -> QForm<RatFunc>& { return parity(v) ? r.twisted : r.unit; };
  for (const auto& [a, b] : phi.blocks) {
    if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::UnsupportedSlot, "block with a zero entry");
    const int va = valuation(a, var), vb = valuation(b, var);
    if (va + vb > 0) throw Error(ErrorKind::UnsupportedSlot, "block [a,b] with v(ab) > 0 is not reduced");
    if (va + vb == 0) {
      part(va).add_block(leading_coefficient(a, var), leading_coefficient(b, var));
    } else {
      part(va).add_quasi(leading_coefficient(a, var));
      part(vb).add_quasi(leading_coefficient(b, var));
    }
  }
  for (const auto& c : phi.quasi) {
    if (c.is_zero()) throw Error(ErrorKind::UnsupportedSlot, "zero quasilinear entry");
    part(valuation(c, var)).add_quasi(leading_coefficient(c, var));
  }
  return r;
}

ResidueForms residue_split(const QForm<RatFunc>& phi, const LaurentCtx& ctx) {
  QForm<RatFunc> reduced(phi.unit);
  int split_planes = 0;
  for (const auto& [a, b] : phi.blocks) {
    const RatFunc ta = ctx.to_model(a), tb = ctx.to_model(b);
    if (ta.is_zero() || tb.is_zero() || wp_split(ta * tb, ctx.m).trivial) {
      ++split_planes;
      continue;
    }
    reduced.add_block(ta, tb);
  }
  for (const auto& c : phi.quasi) reduced.add_quasi(ctx.to_model(c));
  ResidueForms t = graded_residues(reduced, ctx.m - 1);
  auto back = [&ctx](const QForm<RatFunc>& q) {
    QForm<RatFunc> r(q.unit);
    for (const auto& [a, b] : q.blocks) r.add_block(ctx.from_model(a), ctx.from_model(b));
    for (const auto& c : q.quasi) r.add_quasi(ctx.from_model(c));
    return r;
  };
  ResidueForms out{QForm<RatFunc>(phi.unit), back(t.twisted)};
  for (int i = 0; i < split_planes; ++i) out.unit.add_block(phi.zero(), phi.zero());
  out.unit = orthogonal_sum(out.unit, back(t.unit));
  return out;
}

ResidueTrace certify_anisotropic(const QForm<RatFunc>& phi, int levels) {
  ResidueTrace t;
  t.anisotropic = certify(phi, levels, 0, &t.lines);
  return t;
}

}  // namespace pfl
