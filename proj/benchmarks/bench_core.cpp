#include <benchmark/benchmark.h>

#include "rtl/canonical.hpp"
#include "rtl/containment.hpp"
#include "rtl/oracle.hpp"
#include "rtl/turan.hpp"
#include "rtl/witness.hpp"

namespace {

rtl::Graph random_graph(int n, unsigned seed) {
  std::uint64_t s = seed;
  auto next = [&s] {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return s >> 11;
  };
  rtl::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (next() % 2) g.add_edge(u, v);
  return g;
}

void BM_CanonicalCode(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<rtl::Graph> graphs;
  for (unsigned s = 0; s < 64; ++s) graphs.push_back(random_graph(n, s + 1));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rtl::canonical_code(graphs[i++ % graphs.size()]));
  }
}
BENCHMARK(BM_CanonicalCode)->Arg(8)->Arg(10)->Arg(12);

// The enumeration kernel: deciding whether the newest vertex sits in the
// canonical last orbit.
void BM_AugmentationCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<rtl::Graph> graphs;
  for (unsigned s = 0; s < 64; ++s) graphs.push_back(random_graph(n, s + 101));
  size_t i = 0;
  for (auto _ : state) {
    const rtl::Graph& g = graphs[i++ % graphs.size()];
    benchmark::DoNotOptimize(rtl::check_canonical_last(g, g.order() - 1).accepted);
  }
}
BENCHMARK(BM_AugmentationCheck)->Arg(8)->Arg(9)->Arg(10);

void BM_ContainBroomInG0(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  rtl::Graph g0 = rtl::g0_graph(n);
  rtl::Graph tree = rtl::build(rtl::TreeSpec::of(rtl::TreeFamily::TDoublePrime, n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rtl::contains_tree(g0, tree));
  }
}
BENCHMARK(BM_ContainBroomInG0)->Arg(16)->Arg(24)->Arg(32);

void BM_DoubleStarDecider(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  rtl::Graph g0 = rtl::g0_graph(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rtl::contains_double_star(g0, n - 5, 3));
  }
}
BENCHMARK(BM_DoubleStarDecider)->Arg(16)->Arg(24)->Arg(32);

void BM_ExEval(benchmark::State& state) {
  rtl::TreeSpec spec = rtl::TreeSpec::of(rtl::TreeFamily::T3, 23);
  long long p = 23;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rtl::ex_eval(spec, p).value);
    if (++p > 200) p = 23;
  }
}
BENCHMARK(BM_ExEval);

void BM_LowerWitness(benchmark::State& state) {
  rtl::TreeSpec a = rtl::TreeSpec::of(rtl::TreeFamily::TDoublePrime, 23);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rtl::lower_witness(a, a, 37).has_value());
  }
}
BENCHMARK(BM_LowerWitness);

}  // namespace

BENCHMARK_MAIN();
