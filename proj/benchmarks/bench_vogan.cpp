#include <benchmark/benchmark.h>

#include "vogan/corpus.hpp"
#include "vogan/report.hpp"

using namespace vogan;

namespace {

Summand sm(int u, int e2, int a) { return Summand{u, HalfInt(e2), a}; }

RatMatrix structured(int n) {
  // Full-rank but with heavy cancellation pressure: harmonic-style entries.
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Rat(1, i + j + 1);
  return m;
}

void bm_rank(benchmark::State& state) {
  RatMatrix m = structured(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}

void bm_chain_census(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  InfinitesimalParam lam = infinitesimal_of(
      make_langlands(DualGroupSpec{Family::GeneralLinear, n}, 4, {sm(0, 0, n)}));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_orbits(lam).orbits.size());
}

void bm_analyze(benchmark::State& state) {
  LanglandsParam phi = make_langlands(DualGroupSpec{Family::Symplectic, 4}, 4, {sm(0, 0, 4)});
  for (auto _ : state) benchmark::DoNotOptimize(analyze(phi).orbit_dim);
}

void bm_corpus_generate(benchmark::State& state) {
  CorpusSpec spec;
  spec.families = {Family::GeneralLinear};
  spec.gl_size = 4;
  spec.random_count = 0;
  for (auto _ : state) benchmark::DoNotOptimize(generate(spec).size());
}

}  // namespace

BENCHMARK(bm_rank)->Arg(10)->Arg(20)->Arg(30);
BENCHMARK(bm_chain_census)->Arg(4)->Arg(6);
BENCHMARK(bm_analyze);
BENCHMARK(bm_corpus_generate);

BENCHMARK_MAIN();
