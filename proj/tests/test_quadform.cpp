#include "doctest.h"

#include <algorithm>
#include <random>

#include "pfl/quadform/witt_finite.hpp"
#include "test_support.hpp"

using namespace pfl;
using pfl::testing::random_gf;

namespace {

using GF = std::shared_ptr<const GaloisField>;

QForm<GFElem> random_form(std::mt19937_64& rng, const GF& f, int blocks, int quasi) {
  QForm<GFElem> q(f->one());
  for (int i = 0; i < blocks; ++i) q.add_block(random_gf(rng, f), random_gf(rng, f));
  for (int i = 0; i < quasi; ++i) q.add_quasi(random_gf(rng, f));
  return q;
}

Vec<GFElem> vec_of(const GF& f, std::initializer_list<uint32_t> codes) {
  Vec<GFElem> v;
  for (auto c : codes) v.push_back(f->element(c));
  return v;
}

// Checks every certificate carried by a decomposition.
void check_witnesses(const QForm<GFElem>& phi, const WittDecomposition<GFElem>& d) {
  const auto zero = phi.zero();
  const auto& hw = d.hyperbolic_witnesses;
  for (size_t i = 0; i < hw.size(); ++i) {
    CHECK(eval_quadratic(phi, hw[i].u) == zero);
    CHECK(eval_quadratic(phi, hw[i].w) == zero);
    CHECK(polar_value(phi, hw[i].u, hw[i].w) == phi.unit);
    for (size_t j = 0; j < i; ++j) {
      CHECK(polar_value(phi, hw[i].u, hw[j].u) == zero);
      CHECK(polar_value(phi, hw[i].u, hw[j].w) == zero);
      CHECK(polar_value(phi, hw[i].w, hw[j].u) == zero);
      CHECK(polar_value(phi, hw[i].w, hw[j].w) == zero);
    }
  }
  for (const auto& z : d.defect_witnesses) {
    CHECK(eval_quadratic(phi, z) == zero);
    for (const auto& h : hw) CHECK(polar_value(phi, z, h.u) == zero);
  }
  CHECK(2 * d.witt_index + d.defect + d.anisotropic_part.dim() == phi.dim());
}

}  // namespace

TEST_CASE("eval_quadratic examples") {
  auto f2 = GaloisField::create(2, 1);
  QForm<GFElem> b11(f2->one());
  b11.add_block(f2->one(), f2->one());
  CHECK(eval_quadratic(b11, vec_of(f2, {1, 1})) == f2->one());
  QForm<GFElem> h(f2->one());
  h.add_block(f2->zero(), f2->zero());
  CHECK(eval_quadratic(h, vec_of(f2, {1, 0})) == f2->zero());
  RatFunc x1 = RatFunc::variable(2, 1, 0);
  PfisterQuad<RatFunc> p({}, x1);
  QForm<RatFunc> q = p.expand();
  CHECK(eval_quadratic(q, {x1.zero_like(), x1.one_like()}) == x1);
  CHECK_THROWS_AS(eval_quadratic(q, {x1}), Error);
  // phi(c v) = c^2 phi(v)
  std::mt19937_64 rng(1);
  auto f8 = GaloisField::create(2, 3);
  for (int t = 0; t < 50; ++t) {
    auto phi = random_form(rng, f8, 2, 1);
    Vec<GFElem> v;
    for (int i = 0; i < phi.dim(); ++i) v.push_back(random_gf(rng, f8));
    GFElem c = random_gf(rng, f8);
    CHECK(eval_quadratic(phi, scale_vec(v, c)) == c * c * eval_quadratic(phi, v));
  }
  CHECK_THROWS_AS(QForm<GFElem>(GaloisField::create(3, 1)->one()), Error);
}

TEST_CASE("polar_form examples") {
  RatFunc a = RatFunc::variable(2, 2, 0), b = RatFunc::variable(2, 2, 1);
  QForm<RatFunc> q(a);
  q.add_block(a, b);
  auto B = polar_form(q);
  CHECK(B.gram[0][0].is_zero());
  CHECK(B.gram[0][1] == a.one_like());
  CHECK(B.gram[1][0] == a.one_like());
  CHECK(B.gram[1][1].is_zero());
  QForm<RatFunc> c(a);
  c.add_quasi(a);
  CHECK(polar_form(c).gram[0][0].is_zero());
  q.add_block(b, a);
  auto B2 = polar_form(q);
  CHECK(B2.gram[2][3] == a.one_like());
  CHECK(B2.gram[0][2].is_zero());
  CHECK(B2.gram[1][3].is_zero());
}

TEST_CASE("tensor_bq and Pfister expansions") {
  const int n = 3;
  RatFunc one = RatFunc::constant(2, n, 1);
  RatFunc a1 = RatFunc::variable(2, n, 0), a2 = RatFunc::variable(2, n, 1), beta = RatFunc::variable(2, n, 2);
  QForm<RatFunc> base(one);
  base.add_block(one, beta);
  CHECK(tensor_bq(BForm<RatFunc>::diagonal({one}), base) == base);
  auto two = tensor_bq(BForm<RatFunc>::diagonal({one, a1}), base);
  CHECK(two.dim() == 4);
  CHECK(two == PfisterQuad<RatFunc>({a1}, beta).expand());
  auto three = tensor_bq(PfisterBilin<RatFunc>(one, {a1, a2}).expand(), base);
  CHECK(three.dim() == 8);
  CHECK(three == PfisterQuad<RatFunc>({a1, a2}, beta).expand());
}

TEST_CASE("tensor_bq with a non-diagonal bilinear form") {
  // B = [[1,1],[1,0]] is not diagonalizable-by-inspection; compare with the defining formula.
  std::mt19937_64 rng(5);
  auto f4 = GaloisField::create(2, 2);
  for (int t = 0; t < 20; ++t) {
    BForm<GFElem> B;
    GFElem s = random_gf(rng, f4), d0 = random_gf(rng, f4), d1 = random_gf(rng, f4);
    B.gram = {{d0, s}, {s, d1}};
    auto phi = random_form(rng, f4, 1, 0);
    auto t_form = tensor_bq(B, phi);
    CHECK(t_form.dim() == 4);
    // Same Witt class as the explicit tensor form on v (x) w coordinates.
    GeneralQuad<GFElem> g(f4->one(), 4);
    auto gp = to_general(phi);
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        for (int l = k; l < 2; ++l) g.m[2 * i + k][2 * i + l] = B.gram[i][i] * gp.m[k][l];
    g.m[0][3] = B.gram[0][1];
    g.m[1][2] = B.gram[0][1];
    auto nb = normalize(g);
    CHECK(isometric_finite(t_form, to_qform(g, nb)));
  }
}

TEST_CASE("normalization preserves values") {
  std::mt19937_64 rng(9);
  auto f8 = GaloisField::create(2, 3);
  for (int t = 0; t < 30; ++t) {
    GeneralQuad<GFElem> g(f8->one(), 5);
    for (int i = 0; i < 5; ++i)
      for (int j = i; j < 5; ++j) g.m[i][j] = random_gf(rng, f8);
    auto nb = normalize(g);
    auto q = to_qform(g, nb);
    std::vector<Vec<GFElem>> basis;
    for (auto& [e, f] : nb.pairs) {
      basis.push_back(e);
      basis.push_back(f);
    }
    for (auto& r : nb.radical) basis.push_back(r);
    REQUIRE(static_cast<int>(basis.size()) == 5);
    for (int s = 0; s < 10; ++s) {
      Vec<GFElem> c, v(5, f8->zero());
      for (int i = 0; i < 5; ++i) c.push_back(random_gf(rng, f8));
      for (int i = 0; i < 5; ++i) v = axpy(v, c[i], basis[i]);
      CHECK(eval_quadratic(q, c) == g.eval(v));
    }
  }
}

TEST_CASE("q_of_bilinear examples") {
  const int n = 2;
  RatFunc one = RatFunc::constant(2, n, 1);
  RatFunc x1 = RatFunc::variable(2, n, 0), x2 = RatFunc::variable(2, n, 1);
  auto q = q_of_bilinear(BForm<RatFunc>::diagonal({x1, x2}));
  CHECK(q.blocks.empty());
  CHECK(q.quasi == std::vector<RatFunc>{x1, x2});
  CHECK(q_of_bilinear(PfisterBilin<RatFunc>(one, {x2}).expand()).quasi == std::vector<RatFunc>{one, x2});
  CHECK(q_of_bilinear(PfisterBilin<RatFunc>(one, {x1, x2}).expand()).quasi ==
        std::vector<RatFunc>{one, x1, x2, x1 * x2});
}

TEST_CASE("witt_decompose examples") {
  auto f2 = GaloisField::create(2, 1);
  GFElem o = f2->one(), z = f2->zero();
  QForm<GFElem> h(o);
  h.add_block(z, z);
  auto dh = witt_decompose(h);
  CHECK(dh.witt_index == 1);
  CHECK(dh.anisotropic_part.dim() == 0);
  QForm<GFElem> b11(o);
  b11.add_block(o, o);
  CHECK(witt_decompose(b11).witt_index == 0);
  // Oracle: none of the 3 nonzero vectors is isotropic.
  CHECK(max_isotropic_subspace_serial(b11).dimension == 0);
  auto pf = PfisterQuad<GFElem>({o}, o).expand();
  auto dp = witt_decompose(pf);
  CHECK(dp.witt_index == 2);
  check_witnesses(pf, dp);
  CHECK(witt_index_oracle(pf) == 2);
  CHECK_THROWS_AS(witt_decompose(QForm<RatFunc>(RatFunc::constant(2, 1, 1))), Error);
}

TEST_CASE("arf_invariant examples") {
  auto f2 = GaloisField::create(2, 1);
  GFElem o = f2->one(), z = f2->zero();
  QForm<GFElem> h(o);
  h.add_block(z, z);
  CHECK(arf_invariant(h).klass == 0);
  QForm<GFElem> b11(o);
  b11.add_block(o, o);
  CHECK(arf_invariant(b11).klass == 1);
  CHECK(!solve_artin_schreier(o, nullptr));
  CHECK(arf_invariant(orthogonal_sum(b11, b11)).klass == 0);
  QForm<GFElem> s(o);
  s.add_quasi(o);
  CHECK_THROWS_AS(arf_invariant(s), Error);
}

TEST_CASE("constructive decomposition agrees with the exhaustive oracle") {
  std::mt19937_64 rng(13);
  struct Cfg {
    int k, blocks, quasi;
  };
  for (Cfg cfg : {Cfg{1, 3, 2}, Cfg{1, 4, 1}, Cfg{1, 2, 4}, Cfg{2, 2, 1}, Cfg{2, 3, 0}, Cfg{3, 1, 2}, Cfg{3, 2, 0},
                  Cfg{4, 2, 0}, Cfg{4, 1, 1}}) {
    auto f = GaloisField::create(2, cfg.k);
    for (int t = 0; t < 12; ++t) {
      auto phi = random_form(rng, f, cfg.blocks, cfg.quasi);
      auto d = witt_decompose(phi);
      check_witnesses(phi, d);
      CHECK(d.witt_index == witt_index_oracle(phi, false));
      CHECK(d.defect == radical_defect_oracle(phi));
      // The remainder has no isotropic vector.
      if (d.anisotropic_part.dim() > 0) CHECK(max_isotropic_subspace_serial(d.anisotropic_part).dimension == 0);
    }
  }
}

TEST_CASE("serial and parallel oracles return the same witness") {
  std::mt19937_64 rng(19);
  auto f2 = GaloisField::create(2, 1);
  auto f4 = GaloisField::create(2, 2);
  for (int t = 0; t < 10; ++t) {
    auto phi = t % 2 ? random_form(rng, f2, 4, 1) : random_form(rng, f4, 2, 1);
    auto a = max_isotropic_subspace_serial(phi), b = max_isotropic_subspace_parallel(phi);
    CHECK(a.dimension == b.dimension);
    CHECK(a.basis == b.basis);
    for (const auto& v : a.basis) CHECK(eval_quadratic(phi, v) == phi.zero());
  }
}

TEST_CASE("decomposition does not depend on the pivot order") {
  std::mt19937_64 rng(23);
  for (int k : {1, 2, 3, 8}) {
    auto f = GaloisField::create(2, k);
    for (int t = 0; t < 15; ++t) {
      auto phi = random_form(rng, f, 1 + t % 4, t % 3);
      std::vector<int> order(phi.dim());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      auto d1 = witt_decompose(phi), d2 = witt_decompose(phi, order);
      check_witnesses(phi, d2);
      CHECK(d1.witt_index == d2.witt_index);
      CHECK(d1.defect == d2.defect);
      CHECK(d1.anisotropic_part.dim() == d2.anisotropic_part.dim());
      if (d1.anisotropic_part.nonsingular() && d1.anisotropic_part.dim() > 0)
        CHECK(arf_invariant(d1.anisotropic_part).klass == arf_invariant(d2.anisotropic_part).klass);
    }
  }
}

TEST_CASE("isotropic Pfister forms are hyperbolic") {
  std::mt19937_64 rng(29);
  for (int k : {1, 2, 3, 4}) {
    auto f = GaloisField::create(2, k);
    for (int t = 0; t < 20; ++t) {
      Vec<GFElem> slots;
      for (int i = 0; i < t % 3; ++i) {
        GFElem a = random_gf(rng, f);
        slots.push_back(a.is_zero() ? f->one() : a);
      }
      PfisterQuad<GFElem> p(slots, random_gf(rng, f));
      auto q = p.expand();
      auto d = witt_decompose(q);
      if (d.witt_index > 0) CHECK(2 * d.witt_index == q.dim());
    }
  }
}

TEST_CASE("is_quad_factor examples over finite fields") {
  auto f2 = GaloisField::create(2, 1);
  GFElem o = f2->one(), z = f2->zero();
  PfisterQuad<GFElem> phi({}, o);  // [1,1], anisotropic over F_2
  CHECK(is_quad_factor(phi, phi).is_factor);
  PfisterQuad<GFElem> hyp({}, z);
  auto v = is_quad_factor(hyp, phi);
  CHECK_FALSE(v.is_factor);
  CHECK(v.witt_index == 1);
  CHECK(v.threshold == 2);
  CHECK_THROWS_AS(is_quad_factor(PfisterQuad<GFElem>({o}, o), phi), Error);
}
