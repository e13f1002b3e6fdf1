#include <benchmark/benchmark.h>

#include <string>

#include "minorforge/graph6.hpp"
#include "minorforge/random.hpp"

namespace mf = minorforge;

namespace {

void BM_WriteGraph6(benchmark::State& state) {
  const mf::Graph g = mf::random_gnp(static_cast<std::size_t>(state.range(0)), 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(mf::write_graph6(g));
}
BENCHMARK(BM_WriteGraph6)->Arg(10)->Arg(100)->Arg(512);

void BM_ParseGraph6(benchmark::State& state) {
  const std::string text =
      mf::write_graph6(mf::random_gnp(static_cast<std::size_t>(state.range(0)), 0.5, 1));
  for (auto _ : state) benchmark::DoNotOptimize(mf::parse_graph6(text));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseGraph6)->Arg(10)->Arg(100)->Arg(512);

void BM_RandomGnp(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(mf::random_gnp(static_cast<std::size_t>(state.range(0)), 0.3, seed++));
}
BENCHMARK(BM_RandomGnp)->Arg(20)->Arg(200);

}  // namespace
