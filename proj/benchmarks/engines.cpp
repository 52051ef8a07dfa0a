#include <benchmark/benchmark.h>

#include <random>

#include "sdlab/corpus.hpp"
#include "sdlab/depth.hpp"
#include "sdlab/generators.hpp"
#include "sdlab/harness.hpp"
#include "sdlab/hilbert.hpp"
#include "sdlab/sdepth.hpp"
#include "sdlab/surgery.hpp"
#include "sdlab/verdicts.hpp"

using namespace sdlab;

namespace {

const char* const kCorpus[] = {"ex3", "ex1", "eex1", "ex", "bad", "rp2"};

void BM_Depth(benchmark::State& state) {
  const QuotientPair q = corpus_instance(kCorpus[state.range(0)]);
  state.SetLabel(kCorpus[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(depth(q).depth);
}
BENCHMARK(BM_Depth)->DenseRange(0, 5);

void BM_Sdepth(benchmark::State& state) {
  const QuotientPair q = corpus_instance(kCorpus[state.range(0)]);
  state.SetLabel(kCorpus[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(sdepth(q).value);
}
BENCHMARK(BM_Sdepth)->DenseRange(0, 5);

void BM_Hdepth(benchmark::State& state) {
  const QuotientPair q = corpus_instance(kCorpus[state.range(0)]);
  state.SetLabel(kCorpus[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(hdepth1(hilbert_series(q)).value);
}
BENCHMARK(BM_Hdepth)->DenseRange(0, 5);

void BM_Herzog(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(herzog_question(n).equal);
}
BENCHMARK(BM_Herzog)->Arg(6)->Arg(11);

void BM_RandomAnalysis(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const QuotientPair q = random_quotient(rng, n);
    benchmark::DoNotOptimize(bounds_report(q).size());
    benchmark::DoNotOptimize(consistency_audit(q).ok());
  }
}
BENCHMARK(BM_RandomAnalysis)->Arg(5)->Arg(6)->Arg(7);

void BM_Ml1Driver(benchmark::State& state) {
  std::mt19937_64 rng(20261015);
  std::vector<Ml1Candidate> pool;
  while (pool.size() < 16) {
    auto cand = random_ml1_candidate(rng, 6);
    if (cand && check_ml1_hypotheses(cand->pair, cand->b).ok()) pool.push_back(*cand);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const Ml1Candidate& c = pool[i++ % pool.size()];
    benchmark::DoNotOptimize(ml1_driver(c.pair, c.b).outcome.has_value());
  }
}
BENCHMARK(BM_Ml1Driver);

}  // namespace
BENCHMARK_MAIN();
