#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

#include "trialmatch/retrieval.hpp"

namespace tmatch = trialmatch;

namespace {

struct Fixture {
  std::vector<tmatch::IndexedDocument> docs;
  std::vector<std::vector<std::string>> queries;
  tmatch::Analyzer analyzer{tmatch::Tokenizer{}};
  tmatch::InvertedIndex index;
};

const Fixture& fixture() {
  static const Fixture f = [] {
    Fixture f;
    std::mt19937 rng(7);
    std::vector<std::string> vocab;
    for (int i = 0; i < 20000; ++i) vocab.push_back("t" + std::to_string(i));
    std::vector<double> weights;
    for (int i = 0; i < 20000; ++i) weights.push_back(1.0 / (i + 1));
    std::discrete_distribution<int> zipf(weights.begin(), weights.end());
    std::uniform_int_distribution<int> len(50, 400);
    for (int d = 0; d < 20000; ++d) {
      std::string text;
      for (int n = len(rng); n > 0; --n) text += vocab[zipf(rng)] + ' ';
      f.docs.push_back({"NCT" + std::to_string(10000000 + d), std::move(text)});
    }
    for (int q = 0; q < 32; ++q) {
      std::vector<std::string> terms;
      for (int n = 0; n < 40; ++n) terms.push_back(vocab[zipf(rng)]);
      f.queries.push_back(std::move(terms));
    }
    f.index = tmatch::build_index(f.docs, f.analyzer);
    return f;
  }();
  return f;
}

void BM_BuildSerial(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(tmatch::build_index_serial(f.docs, f.analyzer));
}

void BM_BuildParallel(benchmark::State& state) {
  const auto& f = fixture();
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tmatch::build_index(f.docs, f.analyzer));
}

void BM_SearchSerial(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) {
    for (const auto& q : f.queries) benchmark::DoNotOptimize(tmatch::search_terms_serial(f.index, {}, q, 1000));
  }
}

void BM_SearchParallel(benchmark::State& state) {
  const auto& f = fixture();
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& q : f.queries) benchmark::DoNotOptimize(tmatch::search_terms(f.index, {}, q, 1000));
  }
}

}  // namespace

BENCHMARK(BM_BuildSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
