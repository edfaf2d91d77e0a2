#include <benchmark/benchmark.h>

#include "weylext/partitions.hpp"
#include "weylext/polytopes.hpp"
#include "weylext/recursion.hpp"

namespace {

using weylext::Count;
using weylext::Int;
using weylext::Prime;

// Full block table through the memoized recursion; args: p, q, k.
void BM_ext_dim_block(benchmark::State& state) {
  const Int p = state.range(0);
  const int q = static_cast<int>(state.range(1));
  const Int k = state.range(2);
  const Int block = weylext::pow_saturated(p, q);
  for (auto _ : state) {
    weylext::ExtEngine engine{Prime{p}};
    Count sum = 0;
    for (Int m = 1; m <= block; ++m)
      for (Int e = 1; e <= block; ++e)
        sum += engine.ext_dim(k, m, e, q).total();
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * block * block);
}
BENCHMARK(BM_ext_dim_block)
    ->Args({3, 2, 1})
    ->Args({3, 3, 2})
    ->Args({2, 5, 3})
    ->Args({5, 2, 4});

// Same block through the brute-force enumeration, for contrast.
void BM_enumerate_block(benchmark::State& state) {
  const Int p = state.range(0);
  const int q = static_cast<int>(state.range(1));
  const Int k = state.range(2);
  const Int block = weylext::pow_saturated(p, q);
  for (auto _ : state) {
    std::size_t sum = 0;
    for (Int m = 1; m <= block; ++m)
      for (Int e = m; e <= block; ++e)
        if (k <= e - m)
          sum += weylext::enumerate_basis(Prime{p}, q, k, m, e).size();
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * block * block);
}
BENCHMARK(BM_enumerate_block)->Args({3, 2, 1})->Args({2, 3, 2});

// Partition-function sweep as used by the series command; args: p, d, max.
void BM_partition_series(benchmark::State& state) {
  const Int p = state.range(0);
  const Int d = state.range(1);
  const Int max = state.range(2);
  for (auto _ : state) {
    weylext::PartitionEngine engine{Prime{p}};
    Count sum = 0;
    for (Int value = 0; value <= max; ++value)
      sum += engine.partition_r(value, d);
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * (max + 1));
}
BENCHMARK(BM_partition_series)->Args({3, 10, 10000})->Args({2, 20, 5000});

// Diagonal partition counts at the scale of the analytic-sandwich checks.
void BM_partition_diagonal(benchmark::State& state) {
  const Int p = state.range(0);
  const Int d = state.range(1);
  for (auto _ : state) {
    weylext::PartitionEngine engine{Prime{p}};
    benchmark::DoNotOptimize(engine.partition_r(d, d));
  }
}
BENCHMARK(BM_partition_diagonal)->Args({2, 300})->Args({3, 300});

}  // namespace

BENCHMARK_MAIN();
