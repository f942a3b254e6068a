#include <benchmark/benchmark.h>

#include "lexsemi/supernat.hpp"

namespace {

void BM_PairEquiv(benchmark::State& state) {
  const auto a = lexsemi::parse_pair("(2^inf * 3^4 * 5, 7^inf * 11)");
  const auto b = lexsemi::parse_pair("(2^inf * 3^2 * 11, 7^inf * 5 * 9)");
  for (auto _ : state) benchmark::DoNotOptimize(lexsemi::pair_equiv(a, b));
}
BENCHMARK(BM_PairEquiv);

void BM_PairEquivOracle(benchmark::State& state) {
  const auto a = lexsemi::parse_pair("(2^inf * 3^4, 3)");
  const auto b = lexsemi::parse_pair("(2^inf * 3^2, 27)");
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lexsemi::pair_equiv_oracle(a, b, bound));
}
BENCHMARK(BM_PairEquivOracle)->Arg(100)->Arg(500);

}  // namespace
