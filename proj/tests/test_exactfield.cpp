#include "doctest.h"

#include <random>

#include "pfl/error.hpp"
#include "pfl/exactfield/field.hpp"
#include "test_support.hpp"

using namespace pfl;
using pfl::testing::nonzero_ratfunc;
using pfl::testing::random_gf;
using pfl::testing::random_ratfunc;

namespace {

RatFunc var(uint32_t p, int n, int i) { return RatFunc::variable(p, n, i); }

}  // namespace

TEST_CASE("field_inverse examples") {
  auto gf2 = GaloisField::create(2, 1);
  CHECK(field_inverse(gf2->one()) == gf2->one());

  auto gf4 = GaloisField::create(2, 2, {1, 1, 1});  // u^2 + u + 1
  GFElem u = gf4->generator_u();
  GFElem u_plus_1 = u + gf4->one();
  CHECK(field_inverse(u) == u_plus_1);
  CHECK(u * u_plus_1 == gf4->one());

  auto f3 = GaloisField::create(3, 1);
  CHECK(field_inverse(f3->element(2)) == f3->element(2));

  CHECK_THROWS_AS(field_inverse(gf4->zero()), Error);
  try {
    field_inverse(f3->zero());
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroInverse);
  }
}

TEST_CASE("galois field construction rejects reducible moduli") {
  CHECK_THROWS_AS(GaloisField::create(2, 2, {1, 0, 1}), Error);  // u^2 + 1 = (u+1)^2
  CHECK_THROWS_AS(GaloisField::create(4, 1), Error);
  CHECK(GaloisField::is_irreducible(2, {1, 1, 0, 1}));  // u^3 + u + 1
  CHECK_FALSE(GaloisField::is_irreducible(3, {2, 0, 1}));  // u^2 - 1
  CHECK(GaloisField::create(3, 2)->order() == 9);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  struct Cfg {
    uint32_t p;
    int k;
  };
  for (Cfg cfg : {Cfg{2, 1}, Cfg{2, 2}, Cfg{2, 3}, Cfg{2, 8}, Cfg{3, 1}, Cfg{3, 2}, Cfg{5, 1}, Cfg{5, 2}}) {
    auto f = GaloisField::create(cfg.p, cfg.k);
    for (int trial = 0; trial < 200; ++trial) {
      GFElem a = random_gf(rng, f), b = random_gf(rng, f), c = random_gf(rng, f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == f->zero());
      if (!a.is_zero()) CHECK(a * a.inverse() == f->one());
      CHECK(a.pow(static_cast<int64_t>(f->order())) == a);
    }
  }
  // Rational function fields.
  for (uint32_t p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 25; ++trial) {
      RatFunc a = random_ratfunc(rng, p, 3), b = random_ratfunc(rng, p, 3), c = random_ratfunc(rng, p, 3);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK(a * a.inverse() == a.one_like());
    }
  }
}

TEST_CASE("frobenius examples and homomorphism") {
  const int n = 2;
  RatFunc x = var(2, n, 0), y = var(2, n, 1);
  CHECK((x + y).frobenius() == x * x + y * y);
  CHECK(x.inverse().frobenius() == (x * x).inverse());
  RatFunc x3 = var(3, 1, 0);
  CHECK(x3.frobenius() == x3 * x3 * x3);

  std::mt19937_64 rng(11);
  for (uint32_t p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 20; ++trial) {
      RatFunc f = random_ratfunc(rng, p, 2), g = random_ratfunc(rng, p, 2);
      CHECK((f + g).frobenius() == f.frobenius() + g.frobenius());
      CHECK((f * g).frobenius() == f.frobenius() * g.frobenius());
      CHECK(f.frobenius() == f.pow(p));
    }
  }
}

TEST_CASE("ratfunc_normalize examples") {
  const uint32_t p = 2;
  Poly x = Poly::variable(p, 2, 0), y = Poly::variable(p, 2, 1);
  Poly one = Poly::constant(p, 2, 1);
  RatFunc r = ratfunc_normalize(x * x + x, x);
  CHECK(r.num() == x + one);
  CHECK(r.den() == one);
  RatFunc s = ratfunc_normalize(x + y, x + y);
  CHECK(s.num() == one);
  CHECK(s.den() == one);
  RatFunc z = ratfunc_normalize(Poly(p, 2), x.pow(3));
  CHECK(z.is_zero());
  CHECK(z.den() == one);
  CHECK_THROWS_AS(ratfunc_normalize(x, Poly(p, 2)), Error);
}

TEST_CASE("canonical form soundness: normalize(f*g, g) = normalize(f, 1)") {
  std::mt19937_64 rng(3);
  for (uint32_t p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 40; ++trial) {
      Poly f = pfl::testing::random_poly(rng, p, 3, 4, 4);
      Poly g(p, 3);
      while (g.is_zero()) g = pfl::testing::random_poly(rng, p, 3, 3, 3);
      RatFunc lhs = ratfunc_normalize(f * g, g);
      RatFunc rhs = ratfunc_normalize(f, Poly::constant(p, 3, 1));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("gcd recovers planted common factors") {
  std::mt19937_64 rng(5);
  for (uint32_t p : {2u, 3u}) {
    for (int trial = 0; trial < 30; ++trial) {
      Poly a = pfl::testing::random_poly(rng, p, 3, 3, 3);
      Poly b = pfl::testing::random_poly(rng, p, 3, 3, 3);
      Poly c = pfl::testing::random_poly(rng, p, 3, 2, 3);
      if (c.is_zero() || a.is_zero() || b.is_zero()) continue;
      Poly g = gcd(a * c, b * c);
      // c divides the gcd, and the gcd divides both inputs.
      CHECK(g.try_divide(c.monic(), nullptr));
      CHECK((a * c).try_divide(g, nullptr));
      CHECK((b * c).try_divide(g, nullptr));
    }
  }
}

TEST_CASE("commutative identity behind the common-slot rewrite") {
  // t = alpha + (alpha - beta)/gamma;  t^p gamma + beta = gamma alpha^p + gamma^(1-p) alpha^p
  //                                                      - gamma^(1-p) beta^p + beta
  for (uint32_t p : {2u, 3u, 5u}) {
    RatFunc alpha = var(p, 3, 0), beta = var(p, 3, 1), gamma = var(p, 3, 2);
    RatFunc t = alpha + (alpha - beta) / gamma;
    RatFunc lhs = t.pow(p) * gamma + beta;
    RatFunc g1mp = gamma.pow(1 - static_cast<int64_t>(p));
    RatFunc rhs = gamma * alpha.pow(p) + g1mp * alpha.pow(p) - g1mp * beta.pow(p) + beta;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("square roots in characteristic 2") {
  RatFunc x = var(2, 2, 0), y = var(2, 2, 1);
  RatFunc root;
  CHECK(ratfunc_sqrt((x + y) * (x + y) / (x * x), &root));
  CHECK(root == (x + y) / x);
  CHECK_FALSE(ratfunc_sqrt(x * y, nullptr));
}

TEST_CASE("evaluation at finite field points") {
  auto gf8 = GaloisField::create(2, 3, {1, 1, 0, 1});
  GFElem u = gf8->generator_u();
  std::vector<GFElem> pt{u, u * u};
  RatFunc x = var(2, 2, 0), y = var(2, 2, 1);
  CHECK(evaluate((x + y) / x, pt) == (u + u * u) / u);
  std::vector<GFElem> zero_pt{gf8->zero(), u};
  CHECK_THROWS_AS(evaluate(y / x, zero_pt), Error);
}

TEST_CASE("gcd(a c, b c) = c gcd(a, b) up to normalization") {
  std::mt19937_64 rng(41);
  for (uint32_t p : {2u, 3u, 7u}) {
    for (int trial = 0; trial < 40; ++trial) {
      Poly a = pfl::testing::random_poly(rng, p, 4, 4, 5);
      Poly b = pfl::testing::random_poly(rng, p, 4, 4, 5);
      Poly c = pfl::testing::random_poly(rng, p, 4, 3, 4);
      if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
      CHECK(gcd(a * c, b * c) == (c * gcd(a, b)).monic());
      CHECK(gcd(a, b) == gcd(b, a));
    }
  }
}
