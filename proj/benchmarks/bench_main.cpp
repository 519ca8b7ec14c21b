#include <benchmark/benchmark.h>

#include "lgldyadic/dyadic.hpp"
#include "lgldyadic/lgl.hpp"

using namespace lgldyadic;

namespace {

// Reference data is cached per order, so this measures the affine mapping.
void mapped_lgl_grid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  lgl_reference(n);
  for (auto _ : state) benchmark::DoNotOptimize(lgl_grid(n, {0.0, 3.0}));
}
BENCHMARK(mapped_lgl_grid)->Arg(100)->Arg(2000);

void dyadic_refine_from_root(benchmark::State& state) {
  const Grid g = lgl_grid(static_cast<int>(state.range(0))).to_grid();
  for (auto _ : state) benchmark::DoNotOptimize(dyadic_refine(g, DyadicGrid(), 1.0));
}
BENCHMARK(dyadic_refine_from_root)->Arg(100)->Arg(500)->Arg(2000);

void nested_family(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (int k = 1; k <= n; ++k) lgl_reference(k);
  for (auto _ : state) {
    for_each_nested_dyadic(n, 1.0, [](int, const DyadicGrid& d) { benchmark::DoNotOptimize(d.node_count()); });
  }
}
BENCHMARK(nested_family)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
