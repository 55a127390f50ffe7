#include <benchmark/benchmark.h>

#include <random>
#include <utility>
#include <vector>

#include "rpq/parallel.hpp"
#include "rpq/sparse_bool.hpp"

namespace {

using rpq::Index;
using rpq::SparseBoolMatrix;

// n x n matrix with about `per_row` entries per row.
SparseBoolMatrix random_matrix(Index n, Index per_row, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Index> col(0, n - 1);
  std::vector<std::pair<Index, Index>> pairs;
  pairs.reserve(std::size_t{n} * per_row);
  for (Index r = 0; r < n; ++r) {
    for (Index k = 0; k < per_row; ++k) pairs.emplace_back(r, col(rng));
  }
  return SparseBoolMatrix::from_pairs(n, n, std::move(pairs));
}

void BM_BoolMatmul(benchmark::State& state) {
  const auto n = static_cast<Index>(state.range(0));
  rpq::set_kernel_threads(static_cast<unsigned>(state.range(1)));
  const SparseBoolMatrix a = random_matrix(n, 8, 1);
  const SparseBoolMatrix b = random_matrix(n, 8, 2);
  for (auto _ : state) benchmark::DoNotOptimize(rpq::bool_matmul(a, b));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * a.nnz());
}
BENCHMARK(BM_BoolMatmul)->ArgsProduct({{1 << 10, 1 << 14, 1 << 17}, {1, 4}})->Unit(benchmark::kMillisecond);

// Frontier-shaped product: few rows against a large adjacency matrix.
void BM_FrontierProduct(benchmark::State& state) {
  const auto n = static_cast<Index>(1 << 17);
  const SparseBoolMatrix g = random_matrix(n, 10, 3);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<Index> col(0, n - 1);
  std::vector<std::pair<Index, Index>> pairs;
  for (Index r = 0; r < 4; ++r) {
    for (std::int64_t k = 0; k < state.range(0); ++k) pairs.emplace_back(r, col(rng));
  }
  const SparseBoolMatrix m = SparseBoolMatrix::from_pairs(4, n, std::move(pairs));
  rpq::set_kernel_threads(1);
  for (auto _ : state) benchmark::DoNotOptimize(rpq::bool_matmul(m, g));
}
BENCHMARK(BM_FrontierProduct)->RangeMultiplier(16)->Range(1, 1 << 16)->Unit(benchmark::kMicrosecond);

void BM_OrSum(benchmark::State& state) {
  const auto n = static_cast<Index>(state.range(0));
  const SparseBoolMatrix a = random_matrix(n, 8, 5);
  const SparseBoolMatrix b = random_matrix(n, 8, 6);
  for (auto _ : state) benchmark::DoNotOptimize(rpq::or_sum(a, b));
}
BENCHMARK(BM_OrSum)->Range(1 << 10, 1 << 17)->Unit(benchmark::kMicrosecond);

void BM_MaskComplement(benchmark::State& state) {
  const auto n = static_cast<Index>(state.range(0));
  const SparseBoolMatrix a = random_matrix(n, 8, 7);
  const SparseBoolMatrix b = random_matrix(n, 8, 8);
  for (auto _ : state) benchmark::DoNotOptimize(rpq::mask_complement(a, b));
}
BENCHMARK(BM_MaskComplement)->Range(1 << 10, 1 << 17)->Unit(benchmark::kMicrosecond);

void BM_Transpose(benchmark::State& state) {
  const auto n = static_cast<Index>(state.range(0));
  const SparseBoolMatrix a = random_matrix(n, 8, 9);
  for (auto _ : state) benchmark::DoNotOptimize(rpq::transpose(a));
}
BENCHMARK(BM_Transpose)->Range(1 << 10, 1 << 17)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
