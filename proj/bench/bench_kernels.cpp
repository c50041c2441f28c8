// Serial reference kernels against the OpenMP versions, at the shapes the
// LeNet / SmallConvNet layers actually use.

#include <benchmark/benchmark.h>

#include <vector>

#include "s2r/kernels.hpp"
#include "s2r/rng.hpp"

namespace k = s2r::kernels;

namespace {

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
  s2r::Rng rng(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform(-1.0, 1.0);
  return v;
}

template <bool Parallel>
void BM_gemm(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const auto kk = static_cast<std::size_t>(state.range(2));
  const auto a = random_vector(m * kk, 1), b = random_vector(kk * n, 2);
  std::vector<double> c(m * n);
  for (auto _ : state) {
    if constexpr (Parallel) k::gemm(k::Trans::no, k::Trans::no, m, n, kk, a, b, c);
    else k::reference::gemm(k::Trans::no, k::Trans::no, m, n, kk, a, b, c);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * m * n * kk));
}

// conv weight (out x C*25) times im2col columns (C*25 x H*W); dense head.
void gemm_shapes(benchmark::internal::Benchmark* b) {
  b->Args({32, 784, 25})->Args({64, 196, 800})->Args({256, 64, 3136})->Args({64, 1024, 75});
}

template <bool Parallel>
void BM_im2col(benchmark::State& state) {
  const auto c = static_cast<std::size_t>(state.range(0));
  const auto hw = static_cast<std::size_t>(state.range(1));
  const auto img = random_vector(c * hw * hw, 3);
  std::vector<double> cols(c * 25 * hw * hw);
  for (auto _ : state) {
    if constexpr (Parallel) k::im2col(img, c, hw, hw, 5, cols);
    else k::reference::im2col(img, c, hw, hw, 5, cols);
    benchmark::DoNotOptimize(cols.data());
  }
}

template <bool Parallel>
void BM_pairwise(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto d = static_cast<std::size_t>(state.range(1));
  const auto x = random_vector(m * d, 4);
  std::vector<double> out(m * m);
  for (auto _ : state) {
    if constexpr (Parallel) k::pairwise_sqdist(x, x, m, m, d, out);
    else k::reference::pairwise_sqdist(x, x, m, m, d, out);
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool Parallel>
void BM_maxpool(benchmark::State& state) {
  const auto planes = static_cast<std::size_t>(state.range(0));
  const auto hw = static_cast<std::size_t>(state.range(1));
  const auto in = random_vector(planes * hw * hw, 5);
  std::vector<double> out(planes * (hw / 2) * (hw / 2));
  std::vector<std::size_t> arg(out.size());
  for (auto _ : state) {
    if constexpr (Parallel) k::maxpool2x2(in, planes, hw, hw, out, arg);
    else k::reference::maxpool2x2(in, planes, hw, hw, out, arg);
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(BM_gemm<false>)->Name("gemm/reference")->Apply(gemm_shapes);
BENCHMARK(BM_gemm<true>)->Name("gemm/openmp")->Apply(gemm_shapes);
BENCHMARK(BM_im2col<false>)->Name("im2col/reference")->Args({1, 28})->Args({32, 14})->Args({3, 32});
BENCHMARK(BM_im2col<true>)->Name("im2col/openmp")->Args({1, 28})->Args({32, 14})->Args({3, 32});
BENCHMARK(BM_pairwise<false>)->Name("pairwise_sqdist/reference")->Args({256, 2})->Args({256, 64});
BENCHMARK(BM_pairwise<true>)->Name("pairwise_sqdist/openmp")->Args({256, 2})->Args({256, 64});
BENCHMARK(BM_maxpool<false>)->Name("maxpool2x2/reference")->Args({250 * 32, 28})->Args({24 * 16, 32});
BENCHMARK(BM_maxpool<true>)->Name("maxpool2x2/openmp")->Args({250 * 32, 28})->Args({24 * 16, 32});

BENCHMARK_MAIN();
