#include <benchmark/benchmark.h>

#include <random>

#include "dioph/poly.hpp"

using namespace dioph;

namespace {

Polynomial random_poly(const FieldSpec& F, std::mt19937_64& rng, int deg) {
  std::vector<Elt> c(deg + 1);
  for (auto& v : c) v = Elt(rng() % F.q());
  if (c.back() == 0) c.back() = 1;
  return Polynomial(std::move(c));
}

}  // namespace

static void BM_squarefree_decomposition(benchmark::State& state) {
  auto F = FieldSpec::make(3);
  std::mt19937_64 rng(7);
  auto f = random_poly(F, rng, 4);
  auto g = random_poly(F, rng, 3);
  // force repeated factors and a p-power branch
  auto h = poly_mul(F, poly_mul(F, f, f), poly_mul(F, g, poly_mul(F, g, g)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(squarefree_decomposition(F, h));
  }
}
BENCHMARK(BM_squarefree_decomposition);

static void BM_is_square_over_closure(benchmark::State& state) {
  auto F = FieldSpec::make(5, 2);
  std::mt19937_64 rng(11);
  std::vector<Polynomial> polys;
  for (int i = 0; i < 64; ++i) polys.push_back(random_poly(F, rng, int(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_square_over_closure(F, polys[i++ % polys.size()]));
  }
}
BENCHMARK(BM_is_square_over_closure)->Arg(4)->Arg(8);

static void BM_gcd(benchmark::State& state) {
  auto F = FieldSpec::make(199);
  std::mt19937_64 rng(13);
  auto f = random_poly(F, rng, 12);
  auto g = random_poly(F, rng, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(poly_gcd(F, f, g));
  }
}
BENCHMARK(BM_gcd);

BENCHMARK_MAIN();
