// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

// Data-parallel inner loops. Every kernel has a plain serial version, kept as
// the reference the OpenMP version is tested against; both evaluate each
// output element with the same operation order, so results are bit-identical
// for any thread count.

#pragma once

#include <span>

namespace imfkit::kernels {

/// Number of worker threads to use; 0 means the OpenMP default. Always 1 when
/// built without OpenMP.
int resolve_threads(int requested);

/// out[i] = sum_j padded[i + j] * weights[j] for i < out.size(), where
/// padded.size() == out.size() + weights.size() - 1.
void correlate_serial(std::span<const double> padded,
                      std::span<const double> weights, std::span<double> out);
void correlate_omp(std::span<const double> padded,
                   std::span<const double> weights, std::span<double> out,
                   int threads = 0);

/// Work (multiply-adds) above which correlate() hands off to the OpenMP path.
inline constexpr std::size_t kParallelWork = std::size_t{1} << 16;

/// Dispatches to the serial or OpenMP kernel by problem size.
void correlate(std::span<const double> padded, std::span<const double> weights,
               std::span<double> out);

}  // namespace imfkit::kernels
