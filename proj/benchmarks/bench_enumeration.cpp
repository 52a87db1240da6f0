// Throughput and delay of the enumeration routes on random graphs. Each run
// stops after kSolutions solutions so large instances stay cheap.

#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "heredenum/heredenum.hpp"

using namespace heredenum;

namespace {

constexpr std::size_t kSolutions = 200;

std::shared_ptr<const Graph> random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) e.emplace_back(a, b);
  return std::make_shared<const Graph>(n, e);
}

void run(benchmark::State& state, const ClassSpec& spec, Variant variant, Mode mode, double p) {
  auto G = random_graph(static_cast<std::size_t>(state.range(0)), p, 7);
  std::size_t emitted = 0;
  std::uint64_t max_delay = 0;
  EnumerateOptions opts;
  opts.limit = kSolutions;
  for (auto _ : state) {
    auto e = enumerate(spec, variant, G, mode, opts);
    auto sols = e->drain();
    emitted += sols.size();
    max_delay = std::max(max_delay, e->stats().max_delay);
    benchmark::DoNotOptimize(sols);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(emitted));
  state.counters["max_delay_steps"] = static_cast<double>(max_delay);
}

void BM_TriviallyPerfectDelay(benchmark::State& state) {
  run(state, ClassSpec::of(ClassKind::TriviallyPerfect), Variant::Connected, Mode::Delay, 0.3);
}
void BM_IntervalDelay(benchmark::State& state) {
  run(state, ClassSpec::of(ClassKind::Interval), Variant::Connected, Mode::Delay, 0.3);
}
void BM_ClusterDelay(benchmark::State& state) {
  run(state, ClassSpec::of(ClassKind::Cluster), Variant::General, Mode::Delay, 0.3);
}
void BM_SplitDelay(benchmark::State& state) {
  run(state, ClassSpec::of(ClassKind::Split), Variant::General, Mode::Delay, 0.3);
}
void BM_ChordalIncremental(benchmark::State& state) {
  run(state, ClassSpec::of(ClassKind::Chordal), Variant::General, Mode::Incremental, 0.3);
}
void BM_FiniteFamilyIncremental(benchmark::State& state) {
  ClassSpec spec = ClassSpec::finite_forbidden({graphs::claw()});
  run(state, spec, Variant::General, Mode::Incremental, 0.3);
}

void BM_Oracle(benchmark::State& state) {
  auto G = random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 7);
  ClassSpec spec = ClassSpec::of(ClassKind::Chordal);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_enumerate(spec, Variant::General, *G));
}

}  // namespace

BENCHMARK(BM_TriviallyPerfectDelay)->RangeMultiplier(2)->Range(8, 32);
BENCHMARK(BM_IntervalDelay)->RangeMultiplier(2)->Range(8, 32);
BENCHMARK(BM_ClusterDelay)->RangeMultiplier(2)->Range(8, 64);
BENCHMARK(BM_SplitDelay)->RangeMultiplier(2)->Range(8, 64);
BENCHMARK(BM_ChordalIncremental)->RangeMultiplier(2)->Range(8, 16);
BENCHMARK(BM_FiniteFamilyIncremental)->RangeMultiplier(2)->Range(8, 16);
BENCHMARK(BM_Oracle)->DenseRange(8, 14, 2);

BENCHMARK_MAIN();
