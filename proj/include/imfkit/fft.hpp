// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#pragma once

#include <complex>
#include <span>
#include <vector>

namespace imfkit::fft {

using cplx = std::complex<double>;

/// Unnormalised forward DFT: X[k] = sum_j x[j] exp(-2 pi i j k / n).
std::vector<cplx> forward(std::span<const cplx> x);
std::vector<cplx> forward(std::span<const double> x);

/// Inverse DFT including the 1/n factor, so inverse(forward(x)) == x.
std::vector<cplx> inverse(std::span<const cplx> x);

}  // namespace imfkit::fft
