#include <benchmark/benchmark.h>

#include <random>

#include "cosetchar/corpus.hpp"
#include "cosetchar/coset_theory.hpp"
#include "cosetchar/group_io.hpp"
#include "cosetchar/inversion.hpp"

namespace {

using namespace cosetchar;

GroupSpec pick(int which) {
  switch (which) {
    case 0: return corpus::frobenius20();
    case 1: return corpus::symmetric4_alternating();
    case 2: return matrix_to_permutation(corpus::gl2_sl2(3));
    default: return matrix_to_permutation(corpus::gl2_sl2(5));
  }
}

void BM_GenerateGroup(benchmark::State& state) {
  const auto spec = pick(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_problem(spec));
}

void BM_CharacterTable(benchmark::State& state) {
  const auto p = build_problem(pick(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(character_table(p.group));
  state.counters["order"] = static_cast<double>(p.group->order());
  state.counters["classes"] = static_cast<double>(p.group->class_count());
}

void BM_CosetAnalysis(benchmark::State& state) {
  const auto p = build_problem(pick(static_cast<int>(state.range(0))));
  const auto table = character_table(p.group);
  for (auto _ : state) {
    const auto a = CosetAnalysis::make(p.group, table, p.normal);
    for (CosetIndex c = 0; c < a.coset_count(); ++c) benchmark::DoNotOptimize(a.build_matrix(c));
  }
}

void BM_Decompose(benchmark::State& state) {
  const auto p = build_problem(pick(static_cast<int>(state.range(0))));
  const auto a = CosetAnalysis::make(p.group, p.normal);
  std::mt19937 rng(1);
  std::vector<std::int64_t> mult(a.table().size());
  for (auto& m : mult) m = static_cast<std::int64_t>(rng() % 4);
  mult[0] += 1;
  const auto theta = Theta::from_multiplicities(a.table(), mult);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(a, theta));
}

}  // namespace

BENCHMARK(BM_GenerateGroup)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CharacterTable)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CosetAnalysis)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Decompose)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
