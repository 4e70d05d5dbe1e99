#include "pfl/laurent/engine.hpp"

#include <algorithm>

#include "pfl/exactfield/linalg.hpp"
#include "pfl/laurent/artin_schreier.hpp"

namespace pfl {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Hyperbolic: return "HYPERBOLIC";
    case Verdict::Anisotropic: return "ANISOTROPIC";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

using V = Vec<RatFunc>;

struct Comp {
  bool block = true;
  V e, f;  // f unused for quasilinear components
  RatFunc a, b;
};

// All work happens in t-coordinates.
class Engine {
 public:
  Engine(const QForm<RatFunc>& phi_t, int m, const SearchParams& params)
      : q_(to_general(phi_t)), m_(m), params_(params), zero_(phi_t.zero()) {
    const int n = q_.dim();
    auto unit = [&](int k) {
      V v(n, zero_);
      v[k] = q_.unit;
      return v;
    };
    int k = 0;
    for (const auto& [a, b] : phi_t.blocks) {
      comps_.push_back({true, unit(k), unit(k + 1), a, b});
      k += 2;
    }
    for (const auto& c : phi_t.quasi) {
      comps_.push_back({false, unit(k), {}, c, zero_});
      ++k;
    }
  }

  void run() {
    while (true) {
      if (rule_degenerate() || rule_artin_schreier() || rule_square_match()) continue;
      if (transfers_ < 4 * q_.dim() + 4 && rule_slot_transfer()) {
        ++transfers_;
        continue;
      }
      trace_ = certify_anisotropic(remainder(), m_);
      if (trace_.anisotropic) {
        certified_ = true;
        return;
      }
      if (!rule_search()) return;
    }
  }

  QForm<RatFunc> remainder() const {
    QForm<RatFunc> r(q_.unit);
    for (const auto& c : comps_) {
      if (c.block)
        r.add_block(c.a, c.b);
      else
        r.add_quasi(c.a);
    }
    return r;
  }
  std::vector<V> remainder_basis() const {
    std::vector<V> out;
    for (const auto& c : comps_)
      if (c.block) {
        out.push_back(c.e);
        out.push_back(c.f);
      }
    for (const auto& c : comps_)
      if (!c.block) out.push_back(c.e);
    return out;
  }
  int remaining_blocks() const {
    int n = 0;
    for (const auto& c : comps_) n += c.block;
    return n;
  }

  std::vector<HyperbolicPair<RatFunc>> planes_;
  std::vector<HenselPlane> hensel_;
  std::vector<V> defects_;
  std::vector<std::string> steps_;
  ResidueTrace trace_;
  bool certified_ = false;

 private:
  RatFunc value(const V& v) const { return q_.eval(v); }
  RatFunc polar(const V& v, const V& w) const { return q_.polar(v, w); }

  bool rule_degenerate() {
    for (size_t i = 0; i < comps_.size(); ++i) {
      Comp& c = comps_[i];
      if (!c.block) {
        if (!c.a.is_zero()) continue;
        defects_.push_back(c.e);
        steps_.push_back("zero quasilinear entry -> defect");
      } else if (c.a.is_zero()) {
        planes_.push_back({c.e, axpy(c.f, c.b, c.e)});
        steps_.push_back("block with zero first entry -> H");
      } else if (c.b.is_zero()) {
        planes_.push_back({c.f, axpy(c.e, c.a, c.f)});
        steps_.push_back("block with zero second entry -> H");
      } else {
        continue;
      }
      comps_.erase(comps_.begin() + i);
      return true;
    }
    return false;
  }

  bool rule_artin_schreier() {
    for (size_t i = 0; i < comps_.size(); ++i) {
      Comp& c = comps_[i];
      if (!c.block) continue;
      WpSplit w = wp_split(c.a * c.b, m_);
      if (!w.trivial) continue;
      if (w.remainder.is_zero()) {
        V u = axpy(c.f, w.root / c.a, c.e);  // q(u) = (r^2 + r + ab) / a = 0
        planes_.push_back({u, axpy(c.e, c.a, u)});
        steps_.push_back("block [" + c.a.to_string() + ", " + c.b.to_string() + "]: ab = r^2 + r with r = " +
                         w.root.to_string() + " -> H");
      } else {
        hensel_.push_back({c.e, c.f, c.a, c.b, w.root, w.remainder});
        steps_.push_back("block [" + c.a.to_string() + ", " + c.b.to_string() +
                         "]: ab - r^2 - r in the maximal ideal -> H (Hensel)");
      }
      comps_.erase(comps_.begin() + i);
      return true;
    }
    return false;
  }

  struct Slot {
    int comp;
    const V* vec;
    RatFunc val;
  };

  std::vector<Slot> slots() const {
    std::vector<Slot> s;
    for (size_t i = 0; i < comps_.size(); ++i) {
      s.push_back({static_cast<int>(i), &comps_[i].e, comps_[i].a});
      if (comps_[i].block) s.push_back({static_cast<int>(i), &comps_[i].f, comps_[i].b});
    }
    return s;
  }

  bool rule_square_match() {
    auto s = slots();
    for (size_t i = 0; i < s.size(); ++i)
      for (size_t j = i + 1; j < s.size(); ++j) {
        if (s[i].comp == s[j].comp) continue;
        RatFunc root;
        if (!ratfunc_sqrt(s[i].val / s[j].val, &root)) continue;
        V u = axpy(*s[i].vec, root, *s[j].vec);
        steps_.push_back("values " + s[i].val.to_string() + " and " + s[j].val.to_string() +
                         " differ by a square -> isotropic vector");
        split(u, {s[i].comp, s[j].comp});
        return true;
      }
    return false;
  }

  // Changing y_i += lambda x_j (and y_j += lambda x_i when j is a block) keeps the blocks orthogonal
  // and shifts q(x_i) q(y_i) by lambda^2 q(x_i) q(x_j); pick lambda to land in the image of wp.
  bool rule_slot_transfer() {
    for (size_t i = 0; i < comps_.size(); ++i) {
      if (!comps_[i].block) continue;
      for (size_t j = 0; j < comps_.size(); ++j) {
        if (j == i) continue;
        for (int oi = 0; oi < 2; ++oi)
          for (int oj = 0; oj < (comps_[j].block ? 2 : 1); ++oj) {
            Comp& ci = comps_[i];
            Comp& cj = comps_[j];
            const RatFunc& ai = oi ? ci.b : ci.a;
            const RatFunc& bi = oi ? ci.a : ci.b;
            const RatFunc& aj = oj ? cj.b : cj.a;
            auto target = to_lpoly(ai * bi, m_);
            auto scale = to_lpoly(ai * aj, m_);
            if (!target || !scale) continue;
            auto lambda = solve_square_shift(*target, *scale, m_, params_.window);
            if (!lambda || lambda->is_zero()) continue;
            const RatFunc lam = from_lpoly(*lambda, m_);
            V& xi = oi ? ci.f : ci.e;
            V& yi = oi ? ci.e : ci.f;
            V& xj = oj ? cj.f : cj.e;
            yi = axpy(yi, lam, xj);
            if (cj.block) {
              V& yj = oj ? cj.e : cj.f;
              yj = axpy(yj, lam, xi);
              (oj ? cj.a : cj.b) = value(yj);
            }
            (oi ? ci.a : ci.b) = value(yi);
            steps_.push_back("slot transfer with lambda = " + lam.to_string() + " between components " +
                             std::to_string(i) + " and " + std::to_string(j));
            return true;
          }
      }
    }
    return false;
  }

  bool rule_search() {
    QForm<RatFunc> rem = remainder();
    if (rem.dim() == 0) return false;
    LaurentSearch search(to_general(rem), m_, params_);
    auto hit = search.run_parallel();
    if (!hit) return false;
    auto basis = remainder_basis();
    V u(q_.dim(), zero_);
    std::vector<int> touched;
    // remainder coordinates: blocks first, then quasi, in component order
    std::vector<int> owner;
    for (size_t i = 0; i < comps_.size(); ++i)
      if (comps_[i].block) owner.insert(owner.end(), {static_cast<int>(i), static_cast<int>(i)});
    for (size_t i = 0; i < comps_.size(); ++i)
      if (!comps_[i].block) owner.push_back(static_cast<int>(i));
    for (size_t k = 0; k < basis.size(); ++k) {
      if (hit->vector[k].is_zero()) continue;
      u = axpy(u, hit->vector[k], basis[k]);
      touched.push_back(owner[k]);
    }
    steps_.push_back("bounded search: isotropic candidate #" + std::to_string(hit->index));
    split(u, touched);
    return true;
  }

  // Splits the isotropic vector u (inside the span of the touched components) off as a hyperbolic
  // pair, or as a defect when it lies in the radical, and renormalizes what is left of the span.
  void split(const V& u, std::vector<int> touched) {
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    std::vector<V> span;
    for (int t : touched) {
      span.push_back(comps_[t].e);
      if (comps_[t].block) span.push_back(comps_[t].f);
    }
    std::vector<V> rows;
    std::vector<V> rest;
    const V* partner = nullptr;
    RatFunc c;
    for (const auto& y : span) {
      c = polar(u, y);
      if (!c.is_zero()) {
        partner = &y;
        break;
      }
    }
    if (partner) {
      V y = scale_vec(*partner, c.inverse());
      V w = axpy(y, value(y), u);
      planes_.push_back({u, w});
      rows = {u, w};
      for (const auto& z : span) rest.push_back(axpy(axpy(z, polar(z, w), u), polar(z, u), w));
    } else {
      defects_.push_back(u);
      rows = {u};
      rest = span;
    }
    const int before = matrix_rank(rows);
    std::vector<V> basis;
    int rank = before;
    for (const auto& z : rest) {
      auto trial = rows;
      trial.push_back(z);
      const int r = matrix_rank(trial);
      if (r > rank) {
        rows.push_back(z);
        basis.push_back(z);
        rank = r;
      }
    }
    for (auto it = touched.rbegin(); it != touched.rend(); ++it) comps_.erase(comps_.begin() + *it);
    rebuild(basis);
  }

  void rebuild(const std::vector<V>& basis) {
    const int r = static_cast<int>(basis.size());
    if (r == 0) return;
    GeneralQuad<RatFunc> g(q_.unit, r);
    for (int i = 0; i < r; ++i) {
      g.m[i][i] = value(basis[i]);
      for (int j = i + 1; j < r; ++j) g.m[i][j] = polar(basis[i], basis[j]);
    }
    NormalBasis<RatFunc> nb = normalize(g);
    auto lift = [&](const V& coords) {
      V v(q_.dim(), zero_);
      for (int k = 0; k < r; ++k) v = axpy(v, coords[k], basis[k]);
      return v;
    };
    for (const auto& [pe, pf] : nb.pairs) {
      V e = lift(pe), f = lift(pf);
      comps_.push_back({true, e, f, value(e), value(f)});
    }
    for (const auto& z : nb.radical) {
      V g0 = lift(z);
      comps_.push_back({false, g0, {}, value(g0), zero_});
    }
  }

  GeneralQuad<RatFunc> q_;
  int m_;
  SearchParams params_;
  RatFunc zero_;
  std::vector<Comp> comps_;
  int transfers_ = 0;
};

V map_vec(const V& v, const LaurentCtx& ctx) {
  V r;
  for (const auto& c : v) r.push_back(ctx.from_model(c));
  return r;
}

QForm<RatFunc> map_form(const QForm<RatFunc>& q, const LaurentCtx& ctx) {
  QForm<RatFunc> r(q.unit);
  for (const auto& [a, b] : q.blocks) r.add_block(ctx.to_model(a), ctx.to_model(b));
  for (const auto& c : q.quasi) r.add_quasi(ctx.to_model(c));
  return r;
}

}  // namespace

LaurentWitt witt_index_laurent(const QForm<RatFunc>& phi, const LaurentCtx& ctx, const SearchParams& params) {
  require_char2(phi.unit);
  Engine eng(map_form(phi, ctx), ctx.m, params);
  eng.run();
  LaurentWitt out;
  out.model = ctx.name();
  for (const auto& p : eng.planes_) out.planes.push_back({map_vec(p.u, ctx), map_vec(p.w, ctx)});
  for (const auto& h : eng.hensel_)
    out.hensel_planes.push_back({map_vec(h.e, ctx), map_vec(h.f, ctx), ctx.from_model(h.a), ctx.from_model(h.b),
                                 ctx.from_model(h.root), ctx.from_model(h.remainder)});
  for (const auto& d : eng.defects_) out.defects.push_back(map_vec(d, ctx));
  out.remainder = map_form(eng.remainder(), ctx);
  for (const auto& v : eng.remainder_basis()) out.remainder_basis.push_back(map_vec(v, ctx));
  out.trace = eng.trace_;
  out.steps = eng.steps_;
  out.lower = static_cast<int>(out.planes.size() + out.hensel_planes.size());
  out.upper = out.lower + (eng.certified_ ? 0 : eng.remaining_blocks());
  return out;
}

}  // namespace pfl
