// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#include "imfkit/kernels.hpp"

#include <cstddef>

#include "imfkit/errors.hpp"

#ifdef IMFKIT_USE_OPENMP
#include <omp.h>
#endif

namespace imfkit::kernels {
namespace {

void check_shapes(std::span<const double> padded,
                  std::span<const double> weights, std::span<double> out) {
  if (weights.empty() || padded.size() != out.size() + weights.size() - 1) {
    throw InvalidArgument("correlate: padded input must hold out + weights - 1 samples");
  }
}

inline double dot_at(const double* p, const double* w, std::size_t m) {
  double acc = 0.0;
  for (std::size_t j = 0; j < m; ++j) acc += p[j] * w[j];
  return acc;
}

}  // namespace

int resolve_threads(int requested) {
#ifdef IMFKIT_USE_OPENMP
  return requested > 0 ? requested : omp_get_max_threads();
#else
  (void)requested;
  return 1;
#endif
}

void correlate_serial(std::span<const double> padded,
                      std::span<const double> weights, std::span<double> out) {
  check_shapes(padded, weights, out);
  const std::size_t m = weights.size();
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = dot_at(padded.data() + i, weights.data(), m);
  }
}

void correlate_omp(std::span<const double> padded,
                   std::span<const double> weights, std::span<double> out,
                   int threads) {
  check_shapes(padded, weights, out);
  const std::size_t m = weights.size();
  const auto n = static_cast<std::ptrdiff_t>(out.size());
  const double* p = padded.data();
  const double* w = weights.data();
  double* o = out.data();
#ifdef IMFKIT_USE_OPENMP
#pragma omp parallel for schedule(static) num_threads(resolve_threads(threads))
#else
  (void)threads;
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    o[i] = dot_at(p + i, w, m);
  }
}

void correlate(std::span<const double> padded, std::span<const double> weights,
               std::span<double> out) {
  if (out.size() * weights.size() >= kParallelWork && resolve_threads(0) > 1) {
    correlate_omp(padded, weights, out);
  } else {
    correlate_serial(padded, weights, out);
  }
}

}  // namespace imfkit::kernels
