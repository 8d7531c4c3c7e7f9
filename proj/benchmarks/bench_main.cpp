#include <benchmark/benchmark.h>

#include "padic_frames/padic_frames.hpp"

using namespace padic_frames;

namespace {

std::vector<Complex> random_vector(std::size_t n) {
  Rng rng(1);
  std::normal_distribution<double> d;
  std::vector<Complex> x(n);
  for (auto& z : x) z = {d(rng), d(rng)};
  return x;
}

// args: p, exponent
void BM_dft_naive(benchmark::State& state) {
  const auto x = random_vector(static_cast<std::size_t>(checked_pow(state.range(0), static_cast<int>(state.range(1)))));
  for (auto _ : state) benchmark::DoNotOptimize(dft::naive(x, dft::Direction::forward));
}

void BM_dft_radix(benchmark::State& state) {
  const auto x = random_vector(static_cast<std::size_t>(checked_pow(state.range(0), static_cast<int>(state.range(1)))));
  for (auto _ : state) benchmark::DoNotOptimize(dft::radix(x, state.range(0), dft::Direction::forward));
}

void fft_sizes(benchmark::internal::Benchmark* b) {
  for (int e : {4, 6, 8, 10}) b->Args({2, e});
  for (int e : {3, 4, 5, 6}) b->Args({3, e});
  for (int e : {2, 3, 4}) b->Args({5, e});
}

// args: p, m, k
void BM_spectral_symbol(benchmark::State& state) {
  const GroupContext ctx(state.range(0));
  Rng rng(2);
  const auto f = random_step_function(ctx, static_cast<int>(state.range(1)), static_cast<int>(state.range(2)), rng);
  const Section section = random_section(ctx, 2, 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_symbol(f, section));
}

// args: p, M
void BM_gram_eigenvalues(benchmark::State& state) {
  const GroupContext ctx(state.range(0));
  const int m = static_cast<int>(state.range(1));
  Rng rng(3);
  const auto f = random_step_function(ctx, m, 1, rng);
  const Section section(ctx);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eigenvalues(gram_matrix(f, section, m)));
  }
}

void BM_frame_sum(benchmark::State& state) {
  const GroupContext ctx(state.range(0));
  Rng rng(4);
  const auto f = random_step_function(ctx, 2, 1, rng);
  const auto g = random_step_function(ctx, 1, 2, rng);
  const Section section(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(frame_sum(g, f, section));
}

void BM_frame_sum_direct(benchmark::State& state) {
  const GroupContext ctx(state.range(0));
  Rng rng(4);
  const auto f = random_step_function(ctx, 2, 1, rng);
  const auto g = random_step_function(ctx, 1, 2, rng);
  const Section section(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(frame_sum_direct(g, f, section));
}

}  // namespace

BENCHMARK(BM_dft_naive)->Apply(fft_sizes);
BENCHMARK(BM_dft_radix)->Apply(fft_sizes);
BENCHMARK(BM_spectral_symbol)->Args({2, 4, 4})->Args({2, 6, 5})->Args({3, 3, 3})->Args({5, 2, 2});
BENCHMARK(BM_gram_eigenvalues)->Args({2, 3})->Args({2, 5})->Args({3, 3})->Args({3, 4})->Args({5, 3});
BENCHMARK(BM_frame_sum)->Arg(2)->Arg(3)->Arg(5);
BENCHMARK(BM_frame_sum_direct)->Arg(2)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
