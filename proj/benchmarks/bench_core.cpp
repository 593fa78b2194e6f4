#include <benchmark/benchmark.h>

#include "tambara/functors.hpp"
#include "tambara/kan_norm.hpp"
#include "tambara/sample.hpp"

using namespace tambara;

namespace {

const char* kGroups[] = {"C2", "C3", "C4", "S3"};

void BM_SpanCompose(benchmark::State& state) {
  FiniteGroup g = builtin_group(kGroups[state.range(0)]);
  Rng rng(1);
  std::vector<std::pair<SpanClass, SpanClass>> pairs;
  for (int k = 0; k < 32; ++k) {
    GSet x = random_gset(g, rng, {2, 3, false}), y = random_gset(g, rng, {2, 3, false}),
         z = random_gset(g, rng, {2, 3, false});
    pairs.emplace_back(random_span(x, y, rng, {3, 6, true}), random_span(y, z, rng, {3, 6, true}));
  }
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[k++ % pairs.size()];
    benchmark::DoNotOptimize(span_compose(b, a));
  }
  state.SetLabel(g.name());
}
BENCHMARK(BM_SpanCompose)->DenseRange(0, 3);

void BM_BispanCompose(benchmark::State& state) {
  FiniteGroup g = builtin_group(kGroups[state.range(0)]);
  Rng rng(2);
  std::vector<std::pair<BispanClass, BispanClass>> pairs;
  for (int k = 0; k < 32; ++k) {
    GSet x = random_gset(g, rng, {1, 3, false}), y = random_gset(g, rng, {1, 3, false}),
         z = random_gset(g, rng, {1, 3, false});
    pairs.emplace_back(random_bispan(x, y, rng, {2, 3, true}, {2, 3, true}),
                       random_bispan(y, z, rng, {2, 3, true}, {2, 3, true}));
  }
  std::size_t k = 0;
  Caps caps;
  caps.max_points = 1 << 16;
  for (auto _ : state) {
    const auto& [a, b] = pairs[k++ % pairs.size()];
    benchmark::DoNotOptimize(bispan_compose(b, a, caps));
  }
  state.SetLabel(g.name());
}
BENCHMARK(BM_BispanCompose)->DenseRange(0, 3);

// Pi along G/e -> pt of n copies of the fold over G/e.
void BM_PiOfFold(benchmark::State& state) {
  FiniteGroup g = builtin_group("C2");
  GSet free = make_orbit(g, 0);
  EquivariantMap i = terminal_map(free);
  std::vector<int> ids(state.range(0) * 2, 0);
  GSet copies = orbit_sum(g, ids);
  std::vector<int> reps(ids.size(), 0);
  SliceObject alpha(extend_from_reps(copies, free, reps));
  Caps caps;
  caps.max_points = 1 << 20;
  for (auto _ : state) benchmark::DoNotOptimize(pi(i, alpha, caps).size());
}
BENCHMARK(BM_PiOfFold)->DenseRange(1, 4);

void BM_BurnsideNorm(benchmark::State& state) {
  FiniteGroup g = builtin_group("S3");
  GSet source = make_orbit(g, 1);
  EquivariantMap i = terminal_map(source);
  Rng rng(3);
  MackeyValue v = burnside_value(random_over(source, rng, {3, 6, false}));
  for (auto _ : state) benchmark::DoNotOptimize(burnside_norm(i, v));
}
BENCHMARK(BM_BurnsideNorm);

void BM_LanEvaluation(benchmark::State& state) {
  FiniteGroup g = builtin_group("C2");
  GSet free = make_orbit(g, 0);
  EquivariantMap i = terminal_map(free);
  SliceObject alpha = SliceObject::identity(free);
  SliceObject beta = SliceObject::identity(terminal(g));
  Caps caps;
  caps.max_enum = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lan_eval_representable(i, alpha, beta, caps).classes.size());
}
BENCHMARK(BM_LanEvaluation)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
