// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#pragma once

#include <span>
#include <vector>

#include "imfkit/core.hpp"

namespace imfkit {

struct EMDSettings {
  int max_imfs = 50;
  int max_inner = 200;
  /// Cauchy-type stop: sum (h_m - h_{m+1})^2 / sum h_m^2 below this ends sifting.
  double sd_threshold = 0.2;
  /// Outer loop runs while the remainder has at least this many extrema.
  int min_extrema = 2;
  /// How the envelopes continue past the endpoints: reflection mirrors the
  /// two nearest maxima/minima about each endpoint, periodic borrows them
  /// from the opposite end, constant pins the envelope at the nearest
  /// extremum value.
  BoundaryExtension boundary = BoundaryExtension::reflection;

  void validate() const;
};

/// Pointwise mean of the upper and lower natural cubic-spline envelopes.
/// Throws TooFewExtrema when the signal has no maximum or no minimum.
std::vector<double> envelope_mean(
    std::span<const double> s,
    BoundaryExtension boundary = BoundaryExtension::reflection);
Signal envelope_mean(const Signal& s,
                     BoundaryExtension boundary = BoundaryExtension::reflection);

/// One sifting step: s - envelope_mean(s).
Signal sift_once(const Signal& s,
                 BoundaryExtension boundary = BoundaryExtension::reflection);

struct ImfExtraction {
  Signal imf;
  int iterations = 0;
  StopReason stop_reason = StopReason::delta_reached;
};

/// Sifts until the SD criterion holds or max_inner steps were taken. If a
/// later iterate loses all maxima or minima, sifting stops there with
/// StopReason::extrema_exhausted.
ImfExtraction extract_imf(const Signal& s, const EMDSettings& cfg = {});

/// Empirical mode decomposition. Sum of IMFs plus residual equals the input
/// up to rounding.
Decomposition emd(const Signal& s, const EMDSettings& cfg = {});

}  // namespace imfkit
