// Serial vs OpenMP kernels: the exhaustive isotropic-subspace oracle over GF(2^k) and the
// bounded Laurent isotropy search. Both pairs must return identical results.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "pfl/laurent/laurent_ctx.hpp"
#include "pfl/laurent/search.hpp"
#include "pfl/quadform/witt_finite.hpp"

using namespace pfl;

namespace {

template <class F>
double millis(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

QForm<GFElem> random_form(std::mt19937_64& rng, const std::shared_ptr<const GaloisField>& f, int blocks, int quasi) {
  std::uniform_int_distribution<uint32_t> pick(0, f->order() - 1);
  QForm<GFElem> q(f->one());
  for (int i = 0; i < blocks; ++i) q.add_block(f->element(pick(rng)), f->element(pick(rng)));
  for (int i = 0; i < quasi; ++i) q.add_quasi(f->element(pick(rng)));
  return q;
}

bool same(const IsotropicSubspace& a, const IsotropicSubspace& b) {
  return a.dimension == b.dimension && a.basis == b.basis;
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-34s %10s %10s %8s %s\n", "kernel", "serial ms", "omp ms", "speedup", "agree");
  bool all_agree = true;

  std::mt19937_64 rng(2024);
  struct Case { int k, blocks, quasi; };
  for (Case c : {Case{1, 4, 1}, Case{1, 5, 0}, Case{2, 3, 0}, Case{2, 3, 1}, Case{3, 2, 1}}) {
    const auto f = GaloisField::create(2, c.k);
    const auto phi = random_form(rng, f, c.blocks, c.quasi);
    IsotropicSubspace s, p;
    const double ts = millis([&] { s = max_isotropic_subspace_serial(phi); });
    const double tp = millis([&] { p = max_isotropic_subspace_parallel(phi); });
    const bool ok = same(s, p);
    all_agree = all_agree && ok;
    char name[64];
    std::snprintf(name, sizeof name, "isotropic subspace GF(%d) dim %d", 1 << c.k, phi.dim());
    std::printf("%-34s %10.1f %10.1f %8.2f %s\n", name, ts, tp, ts / tp, ok ? "yes" : "NO");
  }

  // qpf[[x1 ; x1*x2]] is anisotropic over F2((1/x1))((1/x2))((1/x3)): the search scans every candidate.
  const LaurentCtx ctx(3, Orientation::AtInfinity);
  const RatFunc x1 = ctx.var(0), x2 = ctx.var(1);
  QForm<RatFunc> q(ctx.one());
  for (const auto& [a, b] : PfisterQuad<RatFunc>({x1}, x1 * x2).expand().blocks)
    q.add_block(ctx.to_model(a), ctx.to_model(b));
  for (uint64_t trials : {20000u, 100000u}) {
    SearchParams params;
    params.random_trials = trials;
    LaurentSearch search(to_general(q), 3, params);
    std::optional<SearchHit> s, p;
    const double ts = millis([&] { s = search.run_serial(); });
    const double tp = millis([&] { p = search.run_parallel(); });
    const bool ok = s.has_value() == p.has_value() && (!s || s->index == p->index);
    all_agree = all_agree && ok;
    char name[64];
    std::snprintf(name, sizeof name, "laurent search %llu candidates",
                  static_cast<unsigned long long>(search.candidate_count()));
    std::printf("%-34s %10.1f %10.1f %8.2f %s\n", name, ts, tp, ts / tp, ok ? "yes" : "NO");
  }
  return all_agree ? 0 : 1;
}
