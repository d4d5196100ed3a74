// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

// Serial reference kernels against their OpenMP counterparts, plus the
// FFT moving average and whole-ensemble EEMD.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "imfkit/eemd.hpp"
#include "imfkit/iterfilt.hpp"
#include "imfkit/kernels.hpp"
#include "imfkit/specfreq.hpp"

namespace {

std::vector<double> noise(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<double> x(n);
  for (auto& v : x) v = g(rng);
  return x;
}

imfkit::Signal two_tone(std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n);
    x[i] = std::sin(2.0 * M_PI * 2.0 * t) + std::sin(2.0 * M_PI * 40.0 * t);
  }
  return imfkit::Signal(std::move(x), 1.0 / static_cast<double>(n));
}

// Args: signal length, mask half-length.
void BM_CorrelateSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto l = static_cast<std::size_t>(state.range(1));
  const auto mask = imfkit::make_mask(l);
  const auto padded = noise(n + 2 * l, 1);
  std::vector<double> out(n);
  for (auto _ : state) {
    imfkit::kernels::correlate_serial(padded, mask.weights, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n * mask.weights.size()));
}

void BM_CorrelateOmp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto l = static_cast<std::size_t>(state.range(1));
  const auto mask = imfkit::make_mask(l);
  const auto padded = noise(n + 2 * l, 1);
  std::vector<double> out(n);
  for (auto _ : state) {
    imfkit::kernels::correlate_omp(padded, mask.weights, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n * mask.weights.size()));
}

void BM_MovingAverageFft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto mask = imfkit::make_mask(static_cast<std::size_t>(state.range(1)));
  const auto x = noise(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(imfkit::moving_average_fft(x, mask));
}

void KernelArgs(benchmark::internal::Benchmark* b) {
  for (long n : {4096L, 65536L})
    for (long l : {16L, 256L}) b->Args({n, l});
}

void BM_EemdSerial(benchmark::State& state) {
  const auto s = two_tone(static_cast<std::size_t>(state.range(0)));
  imfkit::EEMDSettings cfg;
  cfg.ne = 32;
  for (auto _ : state) benchmark::DoNotOptimize(imfkit::serial::eemd(s, cfg));
}

void BM_EemdOmp(benchmark::State& state) {
  const auto s = two_tone(static_cast<std::size_t>(state.range(0)));
  imfkit::EEMDSettings cfg;
  cfg.ne = 32;
  for (auto _ : state) benchmark::DoNotOptimize(imfkit::eemd(s, cfg, 0));
}

void BM_IfTracesSerial(benchmark::State& state) {
  const auto s = two_tone(16384);
  const imfkit::Decomposition d{std::vector<imfkit::Signal>(8, s), s, std::vector<imfkit::ImfRecord>(8)};
  for (auto _ : state) benchmark::DoNotOptimize(imfkit::serial::if_traces(d, imfkit::IFEstimator::hilbert));
}

void BM_IfTracesOmp(benchmark::State& state) {
  const auto s = two_tone(16384);
  const imfkit::Decomposition d{std::vector<imfkit::Signal>(8, s), s, std::vector<imfkit::ImfRecord>(8)};
  for (auto _ : state) benchmark::DoNotOptimize(imfkit::if_traces(d, imfkit::IFEstimator::hilbert));
}

}  // namespace

BENCHMARK(BM_CorrelateSerial)->Apply(KernelArgs);
BENCHMARK(BM_CorrelateOmp)->Apply(KernelArgs)->UseRealTime();
BENCHMARK(BM_MovingAverageFft)->Apply(KernelArgs);
BENCHMARK(BM_EemdSerial)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EemdOmp)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_IfTracesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IfTracesOmp)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
