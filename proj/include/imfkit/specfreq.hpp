// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#pragma once

#include <vector>

#include "imfkit/core.hpp"

namespace imfkit {

struct AnalyticSignal {
  Signal real_part;
  Signal imag_part;  // discrete Hilbert transform of real_part

  std::vector<double> modulus() const;
  /// Argument of the analytic signal, unwrapped.
  std::vector<double> phase() const;
};

/// Amplitude and instantaneous frequency (cycles per unit time) per sample.
/// `valid[i]` is false where the estimate is boundary-contaminated or the
/// amplitude is too small to define a frequency.
struct IFTrace {
  Signal amplitude;
  Signal frequency;
  std::vector<bool> valid;

  std::size_t valid_count() const;
};

struct IFOptions {
  /// Fraction of samples invalidated at each end.
  double boundary_fraction = 0.05;
  /// Samples with amplitude <= floor * max amplitude are invalid.
  double amplitude_floor = 1e-8;
  /// derivative_if only evaluates where |s| > floor * max |s|.
  double derivative_floor = 1e-3;
};

enum class IFEstimator { hilbert, derivative };
enum class SpectrumWeight { amplitude, energy };

std::string_view to_string(IFEstimator e);
IFEstimator parse_estimator(std::string_view text);

/// One-sided spectrum construction: negative frequencies zeroed, positive
/// ones doubled, DC and Nyquist kept. Needs n >= 4.
AnalyticSignal analytic_signal(const Signal& s);

/// Adds 2 pi to (or removes it from) every step larger than pi in magnitude.
std::vector<double> unwrap_phase(std::span<const double> phase);

/// Frequency from the centred difference of the unwrapped analytic phase.
IFTrace hilbert_if(const Signal& s, const IFOptions& opt = {});

/// Local estimator f = sqrt(max(0, -s''/s)) / (2 pi), with s'' from centred
/// second differences where |s| is above the derivative floor; gaps near zero
/// crossings are linearly interpolated. Amplitude is the piecewise linear
/// envelope through the local maxima of |s|.
IFTrace derivative_if(const Signal& s, const IFOptions& opt = {});

IFTrace estimate_if(const Signal& s, IFEstimator estimator, const IFOptions& opt = {});

/// Time x frequency amplitude distribution. `amplitude` is row-major with one
/// row per sample time and one column per frequency bin.
struct TimeFrequencyGrid {
  std::vector<double> times;
  std::vector<double> freq_edges;  // nbins + 1 ascending edges
  std::vector<double> amplitude;

  std::size_t bins() const noexcept { return freq_edges.size() - 1; }
  double at(std::size_t t, std::size_t b) const { return amplitude[t * bins() + b]; }
  double total() const;
};

/// Per-IMF traces computed in parallel (threads = 0: OpenMP default).
std::vector<IFTrace> if_traces(const Decomposition& d, IFEstimator estimator,
                               const IFOptions& opt = {}, int threads = 0);

namespace serial {
std::vector<IFTrace> if_traces(const Decomposition& d, IFEstimator estimator,
                               const IFOptions& opt = {});
}  // namespace serial

/// Deposits each valid sample's amplitude (or squared amplitude) into the
/// bin containing its frequency. Bins split [0, 1/(2 dt)] uniformly;
/// frequencies outside that range go to the nearest edge bin, so the grid
/// total equals the summed weights of all valid samples.
TimeFrequencyGrid accumulate_spectrum(const std::vector<IFTrace>& traces,
                                      const Signal& grid_signal, std::size_t nbins,
                                      SpectrumWeight weight = SpectrumWeight::amplitude);

TimeFrequencyGrid hilbert_spectrum(const Decomposition& d, std::size_t nbins,
                                   IFEstimator estimator = IFEstimator::hilbert,
                                   SpectrumWeight weight = SpectrumWeight::amplitude,
                                   const IFOptions& opt = {}, int threads = 0);

}  // namespace imfkit
