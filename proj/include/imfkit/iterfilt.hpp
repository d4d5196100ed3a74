// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#pragma once

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "imfkit/core.hpp"

namespace imfkit {

/// Discrete IF mask: 2l+1 even, nonnegative weights summing to one.
struct MaskFunction {
  std::vector<double> weights;
  std::size_t half_length = 0;

  /// Centred DFT of the mask on an n-point grid at bin k:
  /// sum_{j=-l..l} w_j cos(2 pi j k / n). Real because the mask is even.
  double gain(std::size_t k, std::size_t n) const;

  /// Throws InvalidArgument unless size, symmetry, sign and unit sum hold.
  void validate() const;
};

/// Self-convolution of a uniform window of width l+1: the triangular mask
/// w_j = (l + 1 - |j|) / (l + 1)^2. Its DFT is a squared magnitude, hence
/// nonnegative.
MaskFunction make_mask(std::size_t half_length);

using MaskFactory = std::function<MaskFunction(std::size_t)>;

/// How the mask half-length follows from the extrema of the current signal.
enum class MaskLengthRule {
  fixed0,      // xi * smallest distance between consecutive extrema
  fixed1,      // xi * largest distance
  ave,         // 2 * xi * L / (number of extrema)
  almost_min,  // 2 * xi * 30th percentile of the distances
};

std::string_view to_string(MaskLengthRule rule);
/// Accepts "0", "1", "ave", "almost_min" (case-insensitive, also "Almost_min").
MaskLengthRule parse_mask_rule(std::string_view text);

struct IFSettings {
  /// Inner stop: ||moving average|| / ||signal|| below delta.
  double delta = 0.001;
  /// Outer loop runs while the remainder has at least this many extrema.
  int ext_points = 3;
  int n_imfs = 1;
  BoundaryExtension extension = BoundaryExtension::periodic;
  int max_inner = 200;
  MaskLengthRule alpha = MaskLengthRule::ave;
  /// Mask length multiplier; 1.1 to 3 is the useful range.
  double xi = 1.6;
  /// Half-lengths to use for the first IMFs instead of computing them.
  std::vector<std::size_t> mask_lengths_override;
  /// Builds the mask for a given half-length. Empty means make_mask.
  MaskFactory mask_factory;

  void validate() const;
  MaskFunction mask(std::size_t half_length) const;
};

/// Percentile with linear interpolation between adjacent order statistics
/// (position p/100 * (m - 1) in the sorted values).
double percentile(std::vector<double> values, double p);

/// Mask half-length from the given (ascending) extremum positions of a
/// signal of length L. Clamped to [1, floor((L-1)/2)].
std::size_t mask_length_from_extrema(std::span<const std::size_t> positions,
                                     std::size_t length, MaskLengthRule rule,
                                     double xi);
std::size_t mask_length(const Signal& s, const IFSettings& cfg);

/// The FFT path is used under periodic extension once n reaches this...
inline constexpr std::size_t kFftMinLength = 1024;
/// ...or the mask has at least this many taps.
inline constexpr std::size_t kFftMinTaps = 65;

/// Local average sum_j s_ext(i + j) w_j, restricted to the original window.
/// Throws MaskTooLong unless the half-length is below the signal length.
std::vector<double> moving_average(std::span<const double> s, const MaskFunction& w,
                                   BoundaryExtension ext);
Signal moving_average(const Signal& s, const MaskFunction& w, BoundaryExtension ext);

/// Direct summation on the extended signal (any extension).
std::vector<double> moving_average_direct(std::span<const double> s,
                                          const MaskFunction& w,
                                          BoundaryExtension ext);
/// Circular convolution through the DFT (periodic extension only).
std::vector<double> moving_average_fft(std::span<const double> s, const MaskFunction& w);

struct IfExtraction {
  Signal imf;
  int iterations = 0;
  StopReason stop_reason = StopReason::delta_reached;
};

/// Inner loop: s <- s - moving_average(s) with a fixed mask of half-length l,
/// until the average/signal norm ratio drops below delta or max_inner steps.
IfExtraction if_extract(const Signal& s, std::size_t half_length,
                        const IFSettings& cfg = {});

/// Iterative filtering decomposition. The mask half-length used for each IMF
/// is recorded in its meta entry (see Decomposition::mask_lengths).
Decomposition iterative_filtering(const Signal& s, const IFSettings& cfg = {});

}  // namespace imfkit
