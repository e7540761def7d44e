#include <benchmark/benchmark.h>

#include "harness/generators.hpp"
#include "tiltkit/zmod/reduction.hpp"

namespace {

using namespace tiltkit;
using harness::Gen;
using harness::GeneratorConfig;

GeneratorConfig config(long long entry) {
  GeneratorConfig c;
  c.entry_bound = entry;
  return c;
}

// Square matrices of side state.range(0), entries in [-range(1), range(1)].
void BM_Smith(benchmark::State& state) {
  Gen g(config(state.range(1)), "bench:smith", 0);
  std::vector<IntMatrix> ms;
  for (int i = 0; i < 16; ++i) {
    const auto n = static_cast<size_t>(state.range(0));
    ms.push_back(g.matrix(n, n, state.range(1)));
  }
  size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(smith(ms[i++ % ms.size()]));
}
BENCHMARK(BM_Smith)->ArgsProduct({{4, 8, 16, 32}, {9, 1000}});

struct Triple {
  Butterfly p, q;
};

std::vector<Triple> composable(size_t n) {
  std::vector<Triple> out;
  for (size_t i = 0; i < n; ++i) {
    Gen g(config(9), "bench:compose", i);
    BObject x = g.b_object(), y = g.b_object(), z = g.b_object();
    out.push_back({g.butterfly(x, y), g.butterfly(y, z)});
  }
  return out;
}

void BM_ButterflyCompose(benchmark::State& state) {
  const auto ts = composable(16);
  size_t i = 0;
  for (auto _ : state) {
    const Triple& t = ts[i++ % ts.size()];
    benchmark::DoNotOptimize(compose(t.p, t.q));
  }
}
BENCHMARK(BM_ButterflyCompose);

void BM_ButterflyEqual(benchmark::State& state) {
  const auto ts = composable(16);
  std::vector<Butterfly> pq;
  for (const auto& t : ts) pq.push_back(compose(t.p, t.q));
  size_t i = 0;
  for (auto _ : state) {
    const size_t k = i++ % pq.size();
    benchmark::DoNotOptimize(butterfly_equal(pq[k], pq[k]));
  }
}
BENCHMARK(BM_ButterflyEqual);

void BM_Classify(benchmark::State& state) {
  const auto ts = composable(16);
  size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify_morphism(ts[i++ % ts.size()].p));
}
BENCHMARK(BM_Classify);

void BM_HomGroupB(benchmark::State& state) {
  std::vector<std::pair<BObject, BObject>> xs;
  for (size_t i = 0; i < 16; ++i) {
    Gen g(config(9), "bench:homb", i);
    xs.emplace_back(g.b_object(), g.b_object());
  }
  size_t i = 0;
  for (auto _ : state) {
    const auto& [x, y] = xs[i++ % xs.size()];
    benchmark::DoNotOptimize(hom_group_b(x, y));
  }
}
BENCHMARK(BM_HomGroupB);

// Tot and its inverse on B-complexes of length up to range(0).
void BM_TotRoundTrip(benchmark::State& state) {
  std::vector<BComplex> xs;
  for (size_t i = 0; i < 16; ++i) {
    Gen g(config(9), "bench:tot", i);
    xs.push_back(g.b_complex(static_cast<size_t>(state.range(0))));
  }
  size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(g_inverse(tot(xs[i++ % xs.size()])));
}
BENCHMARK(BM_TotRoundTrip)->Arg(2)->Arg(4);

void BM_DecoratedHom(benchmark::State& state) {
  std::vector<std::pair<DecComplex, DecComplex>> xs;
  for (size_t i = 0; i < 8; ++i) {
    Gen g(config(9), "bench:dghom", i);
    xs.emplace_back(g.compatible_complex(3), g.compatible_complex(3));
  }
  size_t i = 0;
  for (auto _ : state) {
    const auto& [x, y] = xs[i++ % xs.size()];
    benchmark::DoNotOptimize(hom_complex_dec(x, y));
  }
}
BENCHMARK(BM_DecoratedHom);

}  // namespace

BENCHMARK_MAIN();
