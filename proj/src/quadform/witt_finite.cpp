#include "pfl/quadform/witt_finite.hpp"

#include <atomic>
#include <optional>

namespace pfl {

namespace {

using V = Vec<GFElem>;

struct Splitter {
  const GeneralQuad<GFElem>& q;

  // Hyperbolic pair inside span(e, f) when B(e, f) = 1 and the plane is isotropic.
  std::optional<HyperbolicPair<GFElem>> split_plane(const V& e, const V& f) const {
    GFElem a = q.eval(e), b = q.eval(f);
    if (a.is_zero()) return HyperbolicPair<GFElem>{e, axpy(f, b, e)};
    if (b.is_zero()) return HyperbolicPair<GFElem>{f, axpy(e, a, f)};
    GFElem z;
    if (!solve_artin_schreier(a * b, &z)) return std::nullopt;
    V u = axpy(f, z / a, e);  // q(u) = (z^2 + z)/a + b = 0
    return HyperbolicPair<GFElem>{u, axpy(e, a, u)};
  }
};

}  // namespace

bool solve_artin_schreier(const GFElem& c, GFElem* z) {
  require_char2(c);
  for (const auto& t : c.field()->elements())
    if (t * t + t == c) {
      if (z) *z = t;
      return true;
    }
  return false;
}

WittDecomposition<GFElem> witt_decompose(const QForm<GFElem>& phi, std::vector<int> pivot_order) {
  const GeneralQuad<GFElem> g = to_general(phi);
  const NormalBasis<GFElem> nb = normalize(g, std::move(pivot_order));
  const Splitter sp{g};
  WittDecomposition<GFElem> out(phi.unit);

  // Radical: one anisotropic vector r0 survives, the rest become defects.
  std::optional<V> r0;
  GFElem c0 = phi.zero();
  for (const auto& r : nb.radical) {
    GFElem c = g.eval(r);
    if (c.is_zero()) {
      out.defect_witnesses.push_back(r);
    } else if (!r0) {
      r0 = r;
      c0 = c;
    } else {
      out.defect_witnesses.push_back(axpy(r, (c / c0).sqrt(), *r0));
    }
  }

  std::vector<std::pair<V, V>> anisotropic;
  for (const auto& [e, f] : nb.pairs) {
    if (r0) {
      // e + sqrt(q(e)/q(r0)) r0 is isotropic and still pairs with f.
      V u = axpy(e, (g.eval(e) / c0).sqrt(), *r0);
      out.hyperbolic_witnesses.push_back({u, axpy(f, g.eval(f), u)});
      continue;
    }
    if (auto h = sp.split_plane(e, f)) {
      out.hyperbolic_witnesses.push_back(*h);
    } else {
      anisotropic.emplace_back(e, f);
    }
  }
  // Two anisotropic planes always contain a hyperbolic plane; the complement is split again.
  while (anisotropic.size() >= 2) {
    auto [e1, f1] = anisotropic[anisotropic.size() - 2];
    auto [e2, f2] = anisotropic.back();
    anisotropic.resize(anisotropic.size() - 2);
    GFElem s = (g.eval(e1) / g.eval(e2)).sqrt();
    V u = axpy(e1, s, e2);
    V w = axpy(f1, g.eval(f1), u);
    out.hyperbolic_witnesses.push_back({u, w});
    V f2p = axpy(axpy(f2, g.polar(f2, w), u), g.polar(f2, u), w);
    if (auto h = sp.split_plane(e2, f2p)) {
      out.hyperbolic_witnesses.push_back(*h);
    } else {
      anisotropic.emplace_back(e2, f2p);
    }
  }
  out.witt_index = static_cast<int>(out.hyperbolic_witnesses.size());
  out.defect = static_cast<int>(out.defect_witnesses.size());
  for (const auto& [e, f] : anisotropic) {
    out.anisotropic_part.add_block(g.eval(e), g.eval(f));
    out.anisotropic_basis.push_back(e);
    out.anisotropic_basis.push_back(f);
  }
  if (r0) {
    out.anisotropic_part.add_quasi(c0);
    out.anisotropic_basis.push_back(*r0);
  }
  return out;
}

WittDecomposition<RatFunc> witt_decompose(const QForm<RatFunc>&, std::vector<int>) {
  throw Error(ErrorKind::UnsupportedField, "Witt decomposition by this engine needs a finite base field");
}

ArfInvariant arf_invariant(const QForm<GFElem>& phi) {
  if (!phi.nonsingular()) throw Error(ErrorKind::SingularForm, "Arf invariant needs a nonsingular form");
  GFElem s = phi.zero();
  for (const auto& [a, b] : phi.blocks) s = s + a * b;
  return {s, static_cast<int>(s.field()->trace(s.code()))};
}

bool isometric_finite(const QForm<GFElem>& a, const QForm<GFElem>& b) {
  if (a.dim() != b.dim()) return false;
  auto da = witt_decompose(a), db = witt_decompose(b);
  if (da.witt_index != db.witt_index || da.defect != db.defect) return false;
  const auto& pa = da.anisotropic_part;
  const auto& pb = db.anisotropic_part;
  if (pa.dim() != pb.dim() || pa.quasi.size() != pb.quasi.size()) return false;
  // A nonzero anisotropic quasilinear part is one-dimensional and <c> = <1> over a perfect field.
  if (!pa.nonsingular()) return true;
  return arf_invariant(pa).klass == arf_invariant(pb).klass;
}

// ---------------------------------------------------------------------------
// Oracle

namespace {

struct OracleTables {
  const GaloisField* F = nullptr;
  int n = 0;
  std::vector<std::vector<uint32_t>> vecs;  // isotropic vectors with leading coefficient 1
  std::vector<int> pivot;
  int bound = 0;
};

uint32_t qeval(const QForm<GFElem>& phi, const GaloisField& F, const std::vector<uint32_t>& v) {
  uint32_t acc = 0;
  size_t i = 0;
  for (const auto& [a, b] : phi.blocks) {
    uint32_t x = v[i], y = v[i + 1];
    acc = F.add(acc, F.add(F.mul(a.code(), F.mul(x, x)), F.add(F.mul(x, y), F.mul(b.code(), F.mul(y, y)))));
    i += 2;
  }
  for (const auto& c : phi.quasi) {
    acc = F.add(acc, F.mul(c.code(), F.mul(v[i], v[i])));
    ++i;
  }
  return acc;
}

uint32_t beval(size_t nblocks, const GaloisField& F, const std::vector<uint32_t>& v, const std::vector<uint32_t>& w) {
  uint32_t acc = 0;
  for (size_t k = 0; k < nblocks; ++k)
    acc = F.add(acc, F.add(F.mul(v[2 * k], w[2 * k + 1]), F.mul(v[2 * k + 1], w[2 * k])));
  return acc;
}

OracleTables build_tables(const QForm<GFElem>& phi) {
  OracleTables t;
  if (phi.dim() == 0) return t;
  t.F = phi.unit.field().get();
  t.n = phi.dim();
  const uint64_t q = t.F->order();
  uint64_t total = 1;
  for (int i = 0; i < t.n; ++i) {
    total *= q;
    if (total > (1u << 20)) throw Error(ErrorKind::InvalidArgument, "form too large for exhaustive search");
  }
  // Vectors with pivot position p: leading coefficient 1 at p, zeros before, free after.
  for (int p = 0; p < t.n; ++p) {
    const int free = t.n - p - 1;
    uint64_t count = 1;
    for (int i = 0; i < free; ++i) count *= q;
    std::vector<uint32_t> v(t.n, 0);
    v[p] = 1;
    for (uint64_t idx = 0; idx < count; ++idx) {
      uint64_t r = idx;
      for (int i = t.n - 1; i > p; --i) {
        v[i] = static_cast<uint32_t>(r % q);
        r /= q;
      }
      if (qeval(phi, *t.F, v) == 0) {
        t.vecs.push_back(v);
        t.pivot.push_back(p);
      }
    }
  }
  t.bound = (t.n + static_cast<int>(phi.quasi.size())) / 2;
  return t;
}

struct Dfs {
  const OracleTables& t;
  size_t nblocks;
  std::vector<int> chosen, best;

  void run(const std::vector<int>& cands) {
    if (chosen.size() > best.size()) best = chosen;
    if (static_cast<int>(best.size()) >= t.bound) return;
    // Each further vector needs a new pivot.
    int distinct = 0, last = -1;
    for (int c : cands)
      if (t.pivot[c] != last) {
        ++distinct;
        last = t.pivot[c];
      }
    if (chosen.size() + distinct <= best.size()) return;
    for (size_t k = 0; k < cands.size(); ++k) {
      const int c = cands[k];
      const auto& v = t.vecs[c];
      std::vector<int> next;
      for (size_t l = k + 1; l < cands.size(); ++l) {
        const int d = cands[l];
        if (t.pivot[d] <= t.pivot[c]) continue;
        const auto& w = t.vecs[d];
        if (w[t.pivot[c]] != 0) continue;
        if (beval(nblocks, *t.F, v, w) != 0) continue;
        next.push_back(d);
      }
      chosen.push_back(c);
      run(next);
      chosen.pop_back();
      if (static_cast<int>(best.size()) >= t.bound) return;
    }
  }
};

std::vector<int> branch_candidates(const OracleTables& t, size_t nblocks, int c) {
  std::vector<int> next;
  const auto& v = t.vecs[c];
  for (int d = c + 1; d < static_cast<int>(t.vecs.size()); ++d) {
    if (t.pivot[d] <= t.pivot[c] || t.vecs[d][t.pivot[c]] != 0) continue;
    if (beval(nblocks, *t.F, v, t.vecs[d]) != 0) continue;
    next.push_back(d);
  }
  return next;
}

IsotropicSubspace to_result(const QForm<GFElem>& phi, const OracleTables& t, const std::vector<int>& idx) {
  IsotropicSubspace r;
  r.dimension = static_cast<int>(idx.size());
  for (int c : idx) {
    V v;
    for (uint32_t code : t.vecs[c]) v.push_back(phi.unit.field()->element(code));
    r.basis.push_back(v);
  }
  return r;
}

}  // namespace

IsotropicSubspace max_isotropic_subspace_serial(const QForm<GFElem>& phi) {
  const OracleTables t = build_tables(phi);
  std::vector<int> best;
  for (int c = 0; c < static_cast<int>(t.vecs.size()); ++c) {
    Dfs dfs{t, phi.blocks.size(), {c}, {}};
    dfs.run(branch_candidates(t, phi.blocks.size(), c));
    if (dfs.best.size() > best.size()) best = dfs.best;
    if (static_cast<int>(best.size()) >= t.bound) break;
  }
  return to_result(phi, t, best);
}

IsotropicSubspace max_isotropic_subspace_parallel(const QForm<GFElem>& phi) {
  const OracleTables t = build_tables(phi);
  const int nb = static_cast<int>(t.vecs.size());
  std::vector<std::vector<int>> branch_best(nb);
  // Lowest branch that reached the bound; later branches cannot win.
  std::atomic<int> cutoff{nb};
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < nb; ++c) {
    if (c > cutoff.load()) continue;
    Dfs dfs{t, phi.blocks.size(), {c}, {}};
    dfs.run(branch_candidates(t, phi.blocks.size(), c));
    branch_best[c] = dfs.best;
    if (static_cast<int>(dfs.best.size()) >= t.bound) {
      int cur = cutoff.load();
      while (c < cur && !cutoff.compare_exchange_weak(cur, c)) {
      }
    }
  }
  std::vector<int> best;
  for (int c = 0; c < nb && c <= cutoff.load(); ++c)
    if (branch_best[c].size() > best.size()) best = branch_best[c];
  return to_result(phi, t, best);
}

int radical_defect_oracle(const QForm<GFElem>& phi) {
  const int r = static_cast<int>(phi.quasi.size());
  if (r == 0) return 0;
  const GaloisField& F = *phi.unit.field();
  const uint64_t q = F.order();
  uint64_t total = 1;
  for (int i = 0; i < r; ++i) total *= q;
  if (total > (1u << 22)) throw Error(ErrorKind::InvalidArgument, "radical too large for enumeration");
  uint64_t zeros = 0;
  for (uint64_t idx = 0; idx < total; ++idx) {
    uint64_t rem = idx;
    uint32_t acc = 0;
    for (int i = 0; i < r; ++i) {
      uint32_t z = static_cast<uint32_t>(rem % q);
      rem /= q;
      acc = F.add(acc, F.mul(phi.quasi[i].code(), F.mul(z, z)));
    }
    if (acc == 0) ++zeros;
  }
  int d = 0;
  for (uint64_t c = 1; c < zeros; c *= q) ++d;
  return d;
}

int witt_index_oracle(const QForm<GFElem>& phi, bool parallel) {
  const int i0 = parallel ? max_isotropic_subspace_parallel(phi).dimension : max_isotropic_subspace_serial(phi).dimension;
  return i0 - radical_defect_oracle(phi);
}

QuadFactorVerdict is_quad_factor(const PfisterQuad<GFElem>& psi, const PfisterQuad<GFElem>& phi) {
  if (psi.fold() > phi.fold()) throw Error(ErrorKind::InvalidArgument, "factor fold exceeds form fold");
  auto d = witt_decompose(orthogonal_sum(phi.expand(), psi.expand()));
  QuadFactorVerdict v;
  v.witt_index = d.witt_index;
  v.threshold = 1 << psi.fold();
  v.is_factor = d.witt_index >= v.threshold;
  if (v.is_factor) v.witnesses = d.hyperbolic_witnesses;
  return v;
}

}  // namespace pfl
