#include <benchmark/benchmark.h>

#include "lexsemi/classify.hpp"
#include "lexsemi/generators.hpp"

namespace {

void BM_Classify(benchmark::State& state) {
  lexsemi::Rng rng(5);
  lexsemi::TermOptions options;
  options.allow_posets = false;
  std::vector<lexsemi::OrderTerm> terms;
  for (int i = 0; i < 64; ++i) terms.push_back(lexsemi::random_term(rng, options));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lexsemi::classify(terms[k % 64], terms[(k * 7 + 3) % 64]));
    ++k;
  }
}
BENCHMARK(BM_Classify);

void BM_Condense(benchmark::State& state) {
  lexsemi::Rng rng(6);
  std::vector<lexsemi::OrderTerm> terms;
  for (int i = 0; i < 64; ++i) terms.push_back(lexsemi::random_term(rng));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(lexsemi::condense(terms[k++ % 64]));
}
BENCHMARK(BM_Condense);

}  // namespace
