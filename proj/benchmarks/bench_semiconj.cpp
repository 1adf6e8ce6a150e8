#include <benchmark/benchmark.h>

#include <semiconj/semiconj.hpp>

using namespace semiconj;

namespace {

  void BM_closure_IS(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(closure_of(IS_generators(n)));
    }
  }
  BENCHMARK(BM_closure_IS)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

  void BM_greens_IS(benchmark::State& state) {
    auto const S = symmetric_inverse_monoid(static_cast<std::size_t>(state.range(0))).semigroup;
    for (auto _ : state) {
      benchmark::DoNotOptimize(greens(S));
    }
  }
  BENCHMARK(BM_greens_IS)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

  void BM_tilde_IS(benchmark::State& state) {
    auto const S = symmetric_inverse_monoid(static_cast<std::size_t>(state.range(0))).semigroup;
    for (auto _ : state) {
      benchmark::DoNotOptimize(tilde_classes(S, Witnesses::off));
    }
  }
  BENCHMARK(BM_tilde_IS)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

  void BM_action_IS(benchmark::State& state) {
    auto const S = symmetric_inverse_monoid(static_cast<std::size_t>(state.range(0))).semigroup;
    for (auto _ : state) {
      benchmark::DoNotOptimize(action_classes(S, Witnesses::off));
    }
  }
  BENCHMARK(BM_action_IS)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

  void BM_character_table_S(benchmark::State& state) {
    auto const G = symmetric_group(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(character_table(G));
    }
  }
  BENCHMARK(BM_character_table_S)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

  void BM_character_oracle_T3(benchmark::State& state) {
    auto const S = full_transformation_monoid(3);
    for (auto _ : state) {
      benchmark::DoNotOptimize(CharacterOracle(S));
    }
  }
  BENCHMARK(BM_character_oracle_T3)->Unit(benchmark::kMillisecond);

  void BM_theorem2_IS4(benchmark::State& state) {
    auto const S = symmetric_inverse_monoid(4).semigroup;
    for (auto _ : state) {
      benchmark::DoNotOptimize(verify_theorem2(S));
    }
  }
  BENCHMARK(BM_theorem2_IS4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
