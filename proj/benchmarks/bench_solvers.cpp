#include <benchmark/benchmark.h>

#include "minorforge/bounds.hpp"
#include "minorforge/domset.hpp"
#include "minorforge/invariants.hpp"
#include "minorforge/peel.hpp"
#include "minorforge/random.hpp"

namespace mf = minorforge;

namespace {

// Args: order, edge probability in percent.
void BM_StabilityNumber(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const double p = static_cast<double>(state.range(1)) / 100.0;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    state.PauseTiming();
    const mf::Graph g = mf::random_gnp(n, p, seed++);
    state.ResumeTiming();
    benchmark::DoNotOptimize(mf::stability_number(g).size);
  }
}
BENCHMARK(BM_StabilityNumber)->Args({40, 10})->Args({60, 10})->Args({60, 50})->Args({100, 50})->Args({150, 10});

void BM_ChromaticNumber(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const double p = static_cast<double>(state.range(1)) / 100.0;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    state.PauseTiming();
    const mf::Graph g = mf::random_gnp(n, p, seed++);
    state.ResumeTiming();
    benchmark::DoNotOptimize(mf::chromatic_number(g).colors);
  }
}
BENCHMARK(BM_ChromaticNumber)->Args({20, 50})->Args({30, 30})->Args({40, 50});

void BM_HadwigerNumber(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const double p = static_cast<double>(state.range(1)) / 100.0;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    state.PauseTiming();
    const mf::Graph g = mf::random_gnp(n, p, seed++);
    state.ResumeTiming();
    benchmark::DoNotOptimize(mf::hadwiger_number(g).h);
  }
}
BENCHMARK(BM_HadwigerNumber)
    ->Args({7, 50})
    ->Args({12, 30})
    ->Args({16, 30})
    ->Args({20, 20})
    ->Args({20, 50})
    ->Unit(benchmark::kMicrosecond);

void BM_PetersenNoK6(benchmark::State& state) {
  const mf::Graph g = mf::named::petersen();
  for (auto _ : state) benchmark::DoNotOptimize(mf::kt_minor_model(g, 6).answer);
}
BENCHMARK(BM_PetersenNoK6);

void BM_GrowDominatingSet(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  mf::Graph g;
  for (std::uint64_t seed = 0;; ++seed) {
    g = mf::random_gnp(n, 0.1, seed);
    if (mf::is_connected(g) && mf::find_claw(g)) break;
  }
  const mf::Claw claw = *mf::find_claw(g);
  for (auto _ : state) benchmark::DoNotOptimize(mf::grow_dominating_set(g, claw).k);
}
BENCHMARK(BM_GrowDominatingSet)->Arg(40)->Arg(200);

void BM_PeelMinor(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    state.PauseTiming();
    const mf::Graph g = mf::random_gnp(n, 0.3, seed++);
    state.ResumeTiming();
    benchmark::DoNotOptimize(mf::peel_minor(g).achieved);
  }
}
BENCHMARK(BM_PeelMinor)->Arg(20)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_CheckGraphOrderSeven(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    state.PauseTiming();
    const mf::Graph g = mf::random_gnp(7, 0.5, seed++);
    state.ResumeTiming();
    benchmark::DoNotOptimize(mf::check_graph(g).h);
  }
}
BENCHMARK(BM_CheckGraphOrderSeven);

}  // namespace
