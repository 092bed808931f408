#include <benchmark/benchmark.h>

#include "dtwist/efficiency.hpp"
#include "dtwist/nielsen.hpp"
#include "dtwist/whitehead.hpp"

using namespace dtwist;

static void BM_WordMultiply(benchmark::State& state) {
  Word w = Word::gen(0);
  for (int i = 1; i < 64; ++i) w = w * Word::gen(i % 3, i % 2 ? 1 : -1);
  for (auto _ : state) benchmark::DoNotOptimize(w * w.inverse());
}
BENCHMARK(BM_WordMultiply);

static void BM_MinimizeTuple(benchmark::State& state) {
  const Basis b{std::vector<std::string>{"a", "b", "c"}};
  ClassTuple t{3, {ConjClass(Word::parse(b, "a b a b c^-1 a")),
                   ConjClass(Word::parse(b, "c b a^-1"))}};
  for (auto _ : state) benchmark::DoNotOptimize(minimize(t));
}
BENCHMARK(BM_MinimizeTuple);

static void BM_TheoremPresentation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theorem_presentation(n));
}
BENCHMARK(BM_TheoremPresentation)->Arg(2)->Arg(3)->Arg(4);

static void BM_AssembleCentraliser(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_centraliser(n));
}
BENCHMARK(BM_AssembleCentraliser)->Arg(2)->Arg(3);

static void BM_Abelianise(benchmark::State& state) {
  FinitePresentation p = theorem_presentation(4).pres;
  for (auto _ : state) benchmark::DoNotOptimize(abelianisation(p));
}
BENCHMARK(BM_Abelianise);

BENCHMARK_MAIN();
