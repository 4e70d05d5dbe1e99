#include "doctest.h"

#include <map>
#include <random>
#include <set>
#include <string>

#include "pfl/exactfield/linalg.hpp"
#include "pfl/quadform/witt_finite.hpp"
#include "pfl/symbolalg/symbol_algebra.hpp"
#include "test_support.hpp"

using namespace pfl;
using pfl::testing::random_gf;

namespace {

// Independent oracle: words in x, y rewritten one rule at a time
// (yx -> xy + y, x^p -> x + alpha, y^p -> gamma) until every word is x^i y^j.
template <FieldElement E>
class WordRewriter {
 public:
  WordRewriter(uint32_t p, E alpha, E gamma) : p_(p), alpha_(alpha), gamma_(gamma) {}

  std::map<std::string, E> normalize(std::map<std::string, E> in) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::map<std::string, E> out;
      for (const auto& [w, c] : in) {
        if (c.is_zero()) continue;
        if (auto pos = w.find("yx"); pos != std::string::npos) {
          add(out, w.substr(0, pos) + "xy" + w.substr(pos + 2), c);
          add(out, w.substr(0, pos) + "y" + w.substr(pos + 2), c);
          changed = true;
        } else if (auto px = w.find(std::string(p_, 'x')); px != std::string::npos) {
          add(out, w.substr(0, px) + "x" + w.substr(px + p_), c);
          add(out, w.substr(0, px) + w.substr(px + p_), c * alpha_);
          changed = true;
        } else if (auto py = w.find(std::string(p_, 'y')); py != std::string::npos) {
          add(out, w.substr(0, py) + w.substr(py + p_), c * gamma_);
          changed = true;
        } else {
          add(out, w, c);
        }
      }
      in = std::move(out);
    }
    return in;
  }

  std::map<std::string, E> from(const AlgElement<E>& a) const {
    std::map<std::string, E> r;
    for (uint32_t i = 0; i < p_; ++i)
      for (uint32_t j = 0; j < p_; ++j)
        if (!a.at(i, j).is_zero()) r[std::string(i, 'x') + std::string(j, 'y')] = a.at(i, j);
    return r;
  }

  std::map<std::string, E> mul(const AlgElement<E>& a, const AlgElement<E>& b) const {
    std::map<std::string, E> r;
    for (const auto& [u, cu] : from(a))
      for (const auto& [v, cv] : from(b)) add(r, u + v, cu * cv);
    return normalize(r);
  }

 private:
  static void add(std::map<std::string, E>& m, const std::string& w, const E& c) {
    auto it = m.find(w);
    if (it == m.end()) {
      m.emplace(w, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) m.erase(it);
    }
  }

  uint32_t p_;
  E alpha_, gamma_;
};

template <FieldElement E>
AlgElement<E> random_element(std::mt19937_64& rng, const SymbolAlgebra<E>& alg, const std::shared_ptr<const GaloisField>& f) {
  auto r = alg.zero();
  for (auto& c : r.coeffs) c = random_gf(rng, f);
  return r;
}

}  // namespace

TEST_CASE("alg_mul examples") {
  RatFunc a = RatFunc::variable(2, 2, 0), g = RatFunc::variable(2, 2, 1);
  SymbolAlgebra<RatFunc> alg(a, g);
  auto x = alg.x(), y = alg.y();
  CHECK(alg.mul(y, x) == alg.add(alg.mul(x, y), y));
  auto z = alg.add(alg.scale(x, a), alg.scale(alg.mul(x, y), g));
  CHECK(alg.mul(alg.one(), z) == z);
  CHECK(alg.mul(y, y) == alg.scalar(g));
  SymbolAlgebra<RatFunc> other(a, g);
  CHECK_THROWS_AS(alg.mul(x, other.x()), Error);
  CHECK_THROWS_AS(SymbolAlgebra<RatFunc>(a, a.zero_like()), Error);
}

TEST_CASE("pth power minus self examples") {
  RatFunc a = RatFunc::variable(2, 2, 0), g = RatFunc::variable(2, 2, 1);
  SymbolAlgebra<RatFunc> alg(a, g);
  CHECK(alg.pth_power_minus_self(alg.x()) == alg.scalar(a));
  auto expect = alg.add(alg.scalar(g), alg.y());
  CHECK(alg.pth_power_minus_self(alg.y()) == expect);
  WordRewriter<RatFunc> oracle(2, a, g);
  auto yy = oracle.mul(alg.y(), alg.y());
  CHECK(yy.size() == 1);
  CHECK(yy.at("") == g);

  RatFunc a3 = RatFunc::variable(3, 2, 0), g3 = RatFunc::variable(3, 2, 1);
  SymbolAlgebra<RatFunc> alg3(a3, g3);
  CHECK(alg3.pth_power_minus_self(alg3.x()) == alg3.scalar(a3));
}

TEST_CASE("multiplication matches the word rewriting oracle") {
  std::mt19937_64 rng(3);
  for (auto [p, k] : {std::pair{2u, 3}, std::pair{3u, 2}, std::pair{5u, 1}}) {
    auto f = GaloisField::create(p, k);
    for (int t = 0; t < 10; ++t) {
      GFElem al = random_gf(rng, f), ga = random_gf(rng, f);
      if (ga.is_zero()) ga = f->one();
      SymbolAlgebra<GFElem> alg(al, ga);
      WordRewriter<GFElem> oracle(p, al, ga);
      auto a = random_element(rng, alg, f), b = random_element(rng, alg, f);
      CHECK(oracle.from(alg.mul(a, b)) == oracle.mul(a, b));
    }
  }
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(5);
  for (auto [p, k] : {std::pair{2u, 2}, std::pair{3u, 1}, std::pair{3u, 2}}) {
    auto f = GaloisField::create(p, k);
    for (int t = 0; t < 30; ++t) {
      GFElem al = random_gf(rng, f), ga = random_gf(rng, f);
      if (ga.is_zero()) ga = f->one();
      SymbolAlgebra<GFElem> alg(al, ga);
      auto a = random_element(rng, alg, f), b = random_element(rng, alg, f), c = random_element(rng, alg, f);
      CHECK(alg.mul(alg.mul(a, b), c) == alg.mul(a, alg.mul(b, c)));
    }
  }
  // Over the rational function field as well.
  for (uint32_t p : {2u, 3u}) {
    RatFunc al = RatFunc::variable(p, 2, 0), ga = RatFunc::variable(p, 2, 1);
    SymbolAlgebra<RatFunc> alg(al, ga);
    auto a = alg.add(alg.x(), alg.scale(alg.y(), al));
    auto b = alg.add(alg.mul(alg.x(), alg.y()), alg.scalar(ga));
    auto c = alg.add(alg.y(), alg.scale(alg.mul(alg.x(), alg.x()), al + ga));
    CHECK(alg.mul(alg.mul(a, b), c) == alg.mul(a, alg.mul(b, c)));
  }
}

TEST_CASE("common-slot element over the transcendental model") {
  for (uint32_t p : {2u, 3u, 5u}) CHECK(commonslot_verify(p));
  auto r = commonslot_check(RatFunc::variable(2, 3, 0), RatFunc::variable(2, 3, 1), RatFunc::variable(2, 3, 2));
  CHECK_FALSE(r.degenerate);
}

TEST_CASE("common-slot element specialized over GF(8)") {
  auto f8 = GaloisField::create(2, 3);
  GFElem u = f8->generator_u();
  GFElem al = u, be = u * u, ga = u + f8->one();
  auto r = commonslot_check(al, be, ga);
  CHECK(r.holds());
  // The subalgebra spanned by 1 and w has 64 elements and is closed under multiplication.
  SymbolAlgebra<GFElem> alg(al, ga);
  auto w = alg.add(alg.add(alg.x(), alg.scale(alg.y(), r.t)), alg.mul(alg.x(), alg.y()));
  std::vector<AlgElement<GFElem>> sub;
  std::set<std::vector<uint32_t>> codes;
  for (const auto& c0 : f8->elements())
    for (const auto& c1 : f8->elements()) {
      auto e = alg.add(alg.scalar(c0), alg.scale(w, c1));
      sub.push_back(e);
      std::vector<uint32_t> key;
      for (const auto& c : e.coeffs) key.push_back(c.code());
      codes.insert(key);
    }
  CHECK(codes.size() == 64);
  int zero_divisors = 0;
  bool closed = true;
  for (const auto& a : sub)
    for (const auto& b : sub) {
      auto ab = alg.mul(a, b);
      std::vector<uint32_t> key;
      for (const auto& c : ab.coeffs) key.push_back(c.code());
      closed = closed && codes.count(key);
      if (ab.is_zero() && !a.is_zero() && !b.is_zero()) ++zero_divisors;
    }
  CHECK(closed);
  // T^2 + T = slot has a root iff the subalgebra splits (has zero divisors).
  CHECK((zero_divisors > 0) == solve_artin_schreier(r.slot, nullptr));
}

TEST_CASE("quaternion_norm_form examples") {
  RatFunc a = RatFunc::variable(2, 2, 0), g = RatFunc::variable(2, 2, 1);
  auto nf = quaternion_norm_form(SymbolAlgebra<RatFunc>(a, g));
  CHECK(nf.bilin_slots == std::vector<RatFunc>{g});
  CHECK(nf.as_slot == a);
  auto f4 = GaloisField::create(2, 2);
  auto split = quaternion_norm_form(SymbolAlgebra<GFElem>(f4->zero(), f4->generator_u()));
  CHECK(split.expand().blocks[0].second.is_zero());
  CHECK(2 * witt_decompose(split.expand()).witt_index == 4);
  CHECK_THROWS_AS(quaternion_norm_form(SymbolAlgebra<RatFunc>(RatFunc::variable(3, 1, 0), RatFunc::variable(3, 1, 0))),
                  Error);
}

TEST_CASE("zero divisors match isotropy of the norm form") {
  for (int k : {1, 2}) {
    auto f = GaloisField::create(2, k);
    for (const auto& al : f->elements())
      for (const auto& ga : f->elements()) {
        if (ga.is_zero()) continue;
        SymbolAlgebra<GFElem> alg(al, ga);
        // Enumerate all nonzero pairs.
        std::vector<AlgElement<GFElem>> all;
        const uint32_t q = f->order();
        for (uint32_t idx = 1; idx < q * q * q * q; ++idx) {
          auto e = alg.zero();
          uint32_t r = idx;
          for (auto& c : e.coeffs) {
            c = f->element(r % q);
            r /= q;
          }
          all.push_back(e);
        }
        bool has_zd = false;
        for (size_t i = 0; i < all.size() && !has_zd; ++i)
          for (size_t j = 0; j < all.size() && !has_zd; ++j) has_zd = alg.mul(all[i], all[j]).is_zero();
        bool isotropic = witt_decompose(quaternion_norm_form(alg).expand()).witt_index > 0;
        CHECK(has_zd == isotropic);
      }
  }
}

TEST_CASE("centralizer of the generators is the scalars") {
  std::mt19937_64 rng(7);
  for (auto [p, k] : {std::pair{2u, 1}, std::pair{2u, 3}, std::pair{3u, 1}, std::pair{3u, 2}}) {
    auto f = GaloisField::create(p, k);
    for (int t = 0; t < 5; ++t) {
      GFElem al = random_gf(rng, f), ga = random_gf(rng, f);
      if (ga.is_zero()) ga = f->one();
      SymbolAlgebra<GFElem> alg(al, ga);
      const uint32_t n = p * p;
      std::vector<std::vector<GFElem>> rows(2 * n, std::vector<GFElem>(n, f->zero()));
      for (uint32_t col = 0; col < n; ++col) {
        auto e = alg.monomial(col / p, col % p, f->one());
        auto cx = alg.sub(alg.mul(e, alg.x()), alg.mul(alg.x(), e));
        auto cy = alg.sub(alg.mul(e, alg.y()), alg.mul(alg.y(), e));
        for (uint32_t r = 0; r < n; ++r) {
          rows[r][col] = cx.coeffs[r];
          rows[n + r][col] = cy.coeffs[r];
        }
      }
      auto ker = kernel_basis(rows, n, f->one());
      REQUIRE(ker.size() == 1);
      for (uint32_t c = 1; c < n; ++c) CHECK(ker[0][c].is_zero());
    }
  }
}
