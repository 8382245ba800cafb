#include <benchmark/benchmark.h>

#include "zsr/analysis.hpp"
#include "zsr/counting.hpp"
#include "zsr/oracle.hpp"
#include "zsr/paths.hpp"
#include "zsr/poincare.hpp"

using namespace zsr;

namespace {

void BM_CountSequencesFormula(benchmark::State& state) {
  const GroupSpec g = GroupSpec::parse("2,6");
  const Int m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(count_sequences(g, m, g.identity()));
}
BENCHMARK(BM_CountSequencesFormula)->Arg(4)->Arg(8)->Arg(64)->Arg(512);

void BM_CountSequencesOracle(benchmark::State& state) {
  const GroupSpec g = GroupSpec::parse("2,6");
  const Int m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(sequence_sum_histogram(g, m));
}
BENCHMARK(BM_CountSequencesOracle)->Arg(4)->Arg(8);

void BM_CountSubsetsFormula(benchmark::State& state) {
  const GroupSpec g = GroupSpec::cyclic(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_subsets(g, state.range(0) / 2, g.identity()));
}
BENCHMARK(BM_CountSubsetsFormula)->Arg(16)->Arg(64)->Arg(256);

void BM_CountSubsetsOracle(benchmark::State& state) {
  const GroupSpec g = GroupSpec::cyclic(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(subset_sum_histogram(g, state.range(0) / 2));
}
BENCHMARK(BM_CountSubsetsOracle)->Arg(12)->Arg(16);

void BM_PoincareTable(benchmark::State& state) {
  const GroupSpec g = GroupSpec::parse("2,4");
  const Int bound = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(poincare_table(g, g.identity(), bound, bound));
}
BENCHMARK(BM_PoincareTable)->Arg(6)->Arg(12)->Arg(24);

void BM_SequenceToDyck(benchmark::State& state) {
  const GroupSpec g = GroupSpec::cyclic(7);
  const auto s = MultiplicityVector::parse(g, "0,0,1,1,1,0,2");
  for (auto _ : state) benchmark::DoNotOptimize(sequence_to_dyck(s));
}
BENCHMARK(BM_SequenceToDyck);

void BM_ReciprocityScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reciprocity_scan(state.range(0)));
}
BENCHMARK(BM_ReciprocityScan)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
