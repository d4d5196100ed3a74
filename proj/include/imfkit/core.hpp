// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "imfkit/errors.hpp"

namespace imfkit {

/// Uniformly sampled real time series.
///
/// A Signal always holds at least two finite samples and a positive sample
/// spacing; the constructor rejects anything else with InvalidArgument.
class Signal {
 public:
  explicit Signal(std::vector<double> samples, double dt = 1.0, double t0 = 0.0);

  std::span<const double> samples() const noexcept { return samples_; }
  const std::vector<double>& values() const noexcept { return samples_; }
  double dt() const noexcept { return dt_; }
  double t0() const noexcept { return t0_; }
  std::size_t size() const noexcept { return samples_.size(); }
  double operator[](std::size_t i) const noexcept { return samples_[i]; }
  double time(std::size_t i) const noexcept {
    return t0_ + static_cast<double>(i) * dt_;
  }

  /// New signal on the same time grid with different samples.
  Signal with_samples(std::vector<double> samples) const {
    return Signal(std::move(samples), dt_, t0_);
  }

 private:
  std::vector<double> samples_;
  double dt_;
  double t0_;
};

enum class BoundaryExtension { constant, periodic, reflection };

std::string_view to_string(BoundaryExtension kind);
/// Accepts the full names plus the single-letter forms "c", "p", "r".
BoundaryExtension parse_boundary(std::string_view text);

struct ExtremaSet {
  std::vector<std::size_t> max_indices;
  std::vector<std::size_t> min_indices;

  std::size_t count() const noexcept {
    return max_indices.size() + min_indices.size();
  }
  /// Maxima and minima merged in ascending index order.
  std::vector<std::size_t> merged() const;
};

/// Outer decomposition loops stop once an extracted IMF is no larger than
/// this fraction of the input's max magnitude: such components are rounding
/// residue, whose spurious extrema would otherwise keep the loop going.
inline constexpr double kNegligibleImf = 1e-12;

/// max |x|
double max_abs(std::span<const double> x);

enum class StopReason { delta_reached, max_inner_reached, extrema_exhausted };

std::string_view to_string(StopReason reason);

struct ImfRecord {
  int inner_iterations = 0;
  std::optional<std::size_t> mask_half_length;
  StopReason stop_reason = StopReason::delta_reached;
};

/// Ordered intrinsic mode functions plus the undecomposable remainder.
struct Decomposition {
  std::vector<Signal> imfs;
  Signal residual;
  std::vector<ImfRecord> meta;

  std::size_t size() const noexcept { return imfs.size(); }
  /// Per-IMF mask half-lengths (empty for the sifting methods).
  std::vector<std::size_t> mask_lengths() const;
  /// Sum of every IMF and the residual.
  std::vector<double> reconstruct() const;
};

/// Interior local extrema. A plateau flanked on both sides by lower (higher)
/// values counts as one maximum (minimum) at its midpoint, rounded down.
/// Endpoints are never extrema.
ExtremaSet extrema(std::span<const double> samples);
inline ExtremaSet extrema(const Signal& s) { return extrema(s.samples()); }

/// Index into the original samples for extended position `i` (which may be
/// negative or >= n).
std::size_t extension_index(std::ptrdiff_t i, std::size_t n,
                            BoundaryExtension mode);

std::vector<double> extend(std::span<const double> samples,
                           BoundaryExtension mode, std::size_t pad);
/// Extended signal of length n + 2*pad; t0 moves back by pad*dt.
Signal extend(const Signal& s, BoundaryExtension mode, std::size_t pad);

double norm2(std::span<const double> samples);
inline double norm2(const Signal& s) { return norm2(s.samples()); }

double mean(std::span<const double> samples);
/// Sample standard deviation (n - 1 normalisation).
double stddev(std::span<const double> samples);

}  // namespace imfkit
