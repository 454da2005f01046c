#include <benchmark/benchmark.h>

#include "dioph/shparlinski.hpp"
#include "dioph/tuple_count.hpp"

using namespace dioph;

namespace {

ProblemSpec make_ps(std::uint32_t p, unsigned d, unsigned m) {
  auto F = FieldSpec::make(p);
  auto f = poly_from_encodings(F, std::vector<std::uint64_t>{1, 1});
  return ProblemSpec::make(std::move(F), std::move(f), d, m);
}

}  // namespace

static void BM_card_D(benchmark::State& state) {
  auto ps = make_ps(std::uint32_t(state.range(0)), 2, unsigned(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(card_D(ps, unsigned(state.range(2))));
  }
}
BENCHMARK(BM_card_D)
    ->Args({13, 4, 1})
    ->Args({13, 4, 2})
    ->Args({199, 2, 1})
    ->Unit(benchmark::kMillisecond);

static void BM_r_epsilon_full_weight(benchmark::State& state) {
  auto ps = make_ps(std::uint32_t(state.range(0)), 2, 4);
  auto eps = EpsilonVector::all_ones(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(r_epsilon(ps, eps, 1));
  }
}
BENCHMARK(BM_r_epsilon_full_weight)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_bruteforce_sets(benchmark::State& state) {
  auto ps = make_ps(std::uint32_t(state.range(0)), 2, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_tuples_bruteforce(ps, 1));
  }
}
BENCHMARK(BM_bruteforce_sets)->Arg(31)->Arg(101)->Unit(benchmark::kMillisecond);

static void BM_r_epsilon_averaged(benchmark::State& state) {
  auto ps = make_ps(7, 2, 3);
  auto eps = EpsilonVector::parse("110", 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(r_epsilon_averaged(ps, eps, 1));
  }
}
BENCHMARK(BM_r_epsilon_averaged)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
