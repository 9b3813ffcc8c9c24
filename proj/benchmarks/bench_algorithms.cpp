#include <benchmark/benchmark.h>

#include "listaccess/algorithms.hpp"
#include "listaccess/datagen.hpp"

namespace {

using namespace listaccess;

template <CostReport (*Run)(ListConfiguration, const RequestSequence&, CostModel)>
void BM_Run(benchmark::State& state) {
  const RequestSequence seq =
      gen_sequence(GenSpec{Family::alpha_special(), static_cast<std::size_t>(state.range(0)), 42});
  const ListConfiguration list = build_list(seq);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Run(list, seq, CostModel::Full).total_cost);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Run<run_mtf>)->Name("mtf/alpha")->RangeMultiplier(10)->Range(100, 100000);
BENCHMARK(BM_Run<run_imtf>)->Name("imtf/alpha")->RangeMultiplier(10)->Range(100, 100000);
BENCHMARK(BM_Run<run_static>)->Name("static/alpha")->RangeMultiplier(10)->Range(100, 100000);

void BM_Oracle(benchmark::State& state) {
  const RequestSequence seq = gen_sequence(GenSpec{Family::numeric(8), static_cast<std::size_t>(state.range(0)), 7});
  const ListConfiguration list = build_list(seq);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_bruteforce_oracle(list, seq, CostModel::Full).total_cost);
  }
}
BENCHMARK(BM_Oracle)->Name("oracle/base8")->DenseRange(4, 16, 4);

void BM_GenSequence(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gen_sequence(GenSpec{Family::alpha_special(), static_cast<std::size_t>(state.range(0)), ++seed}));
  }
}
BENCHMARK(BM_GenSequence)->Range(1000, 100000);

}  // namespace

BENCHMARK_MAIN();
