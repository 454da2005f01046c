#include <benchmark/benchmark.h>

#include "dioph/field.hpp"

using namespace dioph;

static void BM_mul_prime(benchmark::State& state) {
  auto F = FieldSpec::make(9973);
  Elt x = 1234, y = 4567;
  for (auto _ : state) {
    x = F.mul(x, y);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_mul_prime);

static void BM_mul_ext_table(benchmark::State& state) {
  auto F = FieldSpec::make(3, 3);  // GF(27), table-backed
  Elt x = 5, y = 17;
  for (auto _ : state) {
    x = F.mul(x, y);
    x = x ? x : 5;
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_mul_ext_table);

static void BM_inv(benchmark::State& state) {
  auto F = FieldSpec::make(9973);
  Elt x = 1;
  for (auto _ : state) {
    x = F.inv(x) + 1;
    x = x >= F.q() ? 1 : x;
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_inv);

static void BM_generator_search(benchmark::State& state) {
  auto F = FieldSpec::make(std::uint32_t(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_generator(F));
  }
}
BENCHMARK(BM_generator_search)->Arg(199)->Arg(9973);

BENCHMARK_MAIN();
