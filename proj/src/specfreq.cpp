// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#include "imfkit/specfreq.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <optional>
#include <string>

#include "imfkit/fft.hpp"
#include "imfkit/kernels.hpp"

namespace imfkit {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_length(const Signal& s, std::size_t n, const char* who) {
  if (s.size() < n) {
    throw InvalidArgument(std::string(who) + " needs at least " + std::to_string(n) +
                          " samples, got " + std::to_string(s.size()));
  }
}

std::vector<bool> validity(std::span<const double> amplitude, const IFOptions& opt) {
  const std::size_t n = amplitude.size();
  const auto edge = static_cast<std::size_t>(std::ceil(opt.boundary_fraction * static_cast<double>(n)));
  double peak = 0.0;
  for (double a : amplitude) peak = std::max(peak, a);
  const double floor = opt.amplitude_floor * peak;
  std::vector<bool> valid(n, false);
  for (std::size_t i = edge; i + edge < n; ++i) valid[i] = amplitude[i] > floor;
  return valid;
}

// Fills samples where `known` is false by linear interpolation between the
// nearest known neighbours; constant beyond the outermost known samples.
void fill_gaps(std::vector<double>& v, const std::vector<bool>& known) {
  const std::size_t n = v.size();
  std::size_t prev = n;  // n: none yet
  for (std::size_t i = 0; i < n; ++i) {
    if (!known[i]) continue;
    if (prev == n) {
      std::fill(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(i), v[i]);
    } else {
      const double span = static_cast<double>(i - prev);
      for (std::size_t j = prev + 1; j < i; ++j) {
        const double t = static_cast<double>(j - prev) / span;
        v[j] = (1.0 - t) * v[prev] + t * v[i];
      }
    }
    prev = i;
  }
  if (prev == n) {
    std::fill(v.begin(), v.end(), 0.0);
  } else {
    std::fill(v.begin() + static_cast<std::ptrdiff_t>(prev) + 1, v.end(), v[prev]);
  }
}

}  // namespace

std::string_view to_string(IFEstimator e) {
  return e == IFEstimator::hilbert ? "hilbert" : "derivative";
}

IFEstimator parse_estimator(std::string_view text) {
  if (text == "hilbert") return IFEstimator::hilbert;
  if (text == "derivative") return IFEstimator::derivative;
  throw InvalidArgument("unknown estimator '" + std::string(text) +
                        "' (expected hilbert or derivative)");
}

std::vector<double> AnalyticSignal::modulus() const {
  std::vector<double> out(real_part.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::hypot(real_part[i], imag_part[i]);
  return out;
}

std::vector<double> AnalyticSignal::phase() const {
  std::vector<double> raw(real_part.size());
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = std::atan2(imag_part[i], real_part[i]);
  return unwrap_phase(raw);
}


std::size_t IFTrace::valid_count() const {
  return static_cast<std::size_t>(std::count(valid.begin(), valid.end(), true));
}

AnalyticSignal analytic_signal(const Signal& s) {
  require_length(s, 4, "analytic_signal");
  const std::size_t n = s.size();
  auto spec = fft::forward(s.samples());
  // Bins 1..ceil(n/2)-1 doubled, DC and (even n) Nyquist kept, rest zeroed.
  const std::size_t half = n / 2;
  const std::size_t last_doubled = (n % 2 == 0) ? half - 1 : half;
  for (std::size_t k = 1; k <= last_doubled; ++k) spec[k] *= 2.0;
  for (std::size_t k = half + 1; k < n; ++k) spec[k] = 0.0;
  const auto z = fft::inverse(spec);
  std::vector<double> imag(n);
  for (std::size_t i = 0; i < n; ++i) imag[i] = z[i].imag();
  return {s, s.with_samples(std::move(imag))};
}

std::vector<double> unwrap_phase(std::span<const double> phase) {
  std::vector<double> out(phase.begin(), phase.end());
  double offset = 0.0;
  for (std::size_t i = 1; i < out.size(); ++i) {
    const double step = phase[i] - phase[i - 1];
    if (step > std::numbers::pi) {
      offset -= kTwoPi;
    } else if (step < -std::numbers::pi) {
      offset += kTwoPi;
    }
    out[i] = phase[i] + offset;
  }
  return out;
}

IFTrace hilbert_if(const Signal& s, const IFOptions& opt) {
  require_length(s, 8, "hilbert_if");
  const auto z = analytic_signal(s);
  auto amplitude = z.modulus();
  const auto phi = z.phase();
  const std::size_t n = s.size();
  std::vector<double> freq(n);
  const double scale = 1.0 / (kTwoPi * s.dt());
  for (std::size_t i = 1; i + 1 < n; ++i) freq[i] = 0.5 * (phi[i + 1] - phi[i - 1]) * scale;
  freq[0] = (phi[1] - phi[0]) * scale;
  freq[n - 1] = (phi[n - 1] - phi[n - 2]) * scale;
  auto valid = validity(amplitude, opt);
  return {s.with_samples(std::move(amplitude)), s.with_samples(std::move(freq)),
          std::move(valid)};
}

IFTrace derivative_if(const Signal& s, const IFOptions& opt) {
  require_length(s, 8, "derivative_if");
  const std::size_t n = s.size();
  const auto x = s.samples();

  std::vector<double> mag(n);
  double peak = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mag[i] = std::abs(x[i]);
    peak = std::max(peak, mag[i]);
  }

  std::vector<double> freq(n, 0.0);
  std::vector<bool> known(n, false);
  const double floor = opt.derivative_floor * peak;
  const double inv_dt2 = 1.0 / (s.dt() * s.dt());
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(mag[i] > floor)) continue;
    const double second = (x[i + 1] - 2.0 * x[i] + x[i - 1]) * inv_dt2;
    freq[i] = std::sqrt(std::max(0.0, -second / x[i])) / kTwoPi;
    known[i] = true;
  }
  fill_gaps(freq, known);

  std::vector<double> amplitude = mag;
  const auto peaks = extrema(mag).max_indices;
  if (!peaks.empty()) {
    std::vector<bool> at_peak(n, false);
    for (auto p : peaks) at_peak[p] = true;
    fill_gaps(amplitude, at_peak);
  }

  auto valid = validity(amplitude, opt);
  return {s.with_samples(std::move(amplitude)), s.with_samples(std::move(freq)),
          std::move(valid)};
}

IFTrace estimate_if(const Signal& s, IFEstimator estimator, const IFOptions& opt) {
  return estimator == IFEstimator::hilbert ? hilbert_if(s, opt) : derivative_if(s, opt);
}

double TimeFrequencyGrid::total() const {
  double sum = 0.0;
  for (double v : amplitude) sum += v;
  return sum;
}

std::vector<IFTrace> if_traces(const Decomposition& d, IFEstimator estimator,
                               const IFOptions& opt, int threads) {
  const auto k = static_cast<std::ptrdiff_t>(d.imfs.size());
  std::vector<std::optional<IFTrace>> slots(d.imfs.size());
  std::exception_ptr failure;
#ifdef IMFKIT_USE_OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(kernels::resolve_threads(threads))
#else
  (void)threads;
#endif
  for (std::ptrdiff_t i = 0; i < k; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    try {
      slots[ui] = estimate_if(d.imfs[ui], estimator, opt);
    } catch (...) {
#ifdef IMFKIT_USE_OPENMP
#pragma omp critical(imfkit_trace_failure)
#endif
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<IFTrace> out;
  out.reserve(slots.size());
  for (auto& t : slots) out.push_back(std::move(*t));
  return out;
}

namespace serial {
std::vector<IFTrace> if_traces(const Decomposition& d, IFEstimator estimator,
                               const IFOptions& opt) {
  std::vector<IFTrace> out;
  out.reserve(d.imfs.size());
  for (const auto& imf : d.imfs) out.push_back(estimate_if(imf, estimator, opt));
  return out;
}
}  // namespace serial

TimeFrequencyGrid accumulate_spectrum(const std::vector<IFTrace>& traces,
                                      const Signal& grid_signal, std::size_t nbins,
                                      SpectrumWeight weight) {
  if (nbins < 1) throw InvalidArgument("spectrum needs at least one frequency bin");
  const std::size_t n = grid_signal.size();
  TimeFrequencyGrid g;
  g.times.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.times[i] = grid_signal.time(i);
  const double nyquist = 0.5 / grid_signal.dt();
  const double width = nyquist / static_cast<double>(nbins);
  g.freq_edges.resize(nbins + 1);
  for (std::size_t b = 0; b <= nbins; ++b) g.freq_edges[b] = width * static_cast<double>(b);
  g.freq_edges[nbins] = nyquist;
  g.amplitude.assign(n * nbins, 0.0);

  for (const auto& tr : traces) {
    if (tr.amplitude.size() != n) {
      throw InvalidArgument("trace length does not match the spectrum time grid");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!tr.valid[i]) continue;
      const double f = tr.frequency[i];
      const double pos = std::floor(f / width);
      std::size_t b = 0;
      if (pos > 0.0) b = std::min(nbins - 1, static_cast<std::size_t>(pos));
      const double a = tr.amplitude[i];
      g.amplitude[i * nbins + b] += weight == SpectrumWeight::energy ? a * a : a;
    }
  }
  return g;
}

TimeFrequencyGrid hilbert_spectrum(const Decomposition& d, std::size_t nbins,
                                   IFEstimator estimator, SpectrumWeight weight,
                                   const IFOptions& opt, int threads) {
  return accumulate_spectrum(if_traces(d, estimator, opt, threads), d.residual, nbins,
                             weight);
}

}  // namespace imfkit
