// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#include "imfkit/iterfilt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "imfkit/fft.hpp"
#include "imfkit/kernels.hpp"

namespace imfkit {
namespace {

std::string lower(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return t;
}

void check_mask_fits(const MaskFunction& w, std::size_t n) {
  if (w.half_length >= n) {
    throw MaskTooLong("mask half-length " + std::to_string(w.half_length) +
                      " must be smaller than the signal length " + std::to_string(n));
  }
}

bool use_fft(std::size_t n, const MaskFunction& w, BoundaryExtension ext) {
  return ext == BoundaryExtension::periodic &&
         (n >= kFftMinLength || w.weights.size() >= kFftMinTaps);
}

// Real DFT gains of the mask wrapped onto an n-point circle.
std::vector<double> circular_gains(const MaskFunction& w, std::size_t n) {
  std::vector<double> kernel(n, 0.0);
  const auto l = static_cast<std::ptrdiff_t>(w.half_length);
  for (std::ptrdiff_t j = -l; j <= l; ++j) {
    kernel[extension_index(j, n, BoundaryExtension::periodic)] +=
        w.weights[static_cast<std::size_t>(j + l)];
  }
  const auto spectrum = fft::forward(std::span<const double>(kernel));
  std::vector<double> g(n);
  for (std::size_t k = 0; k < n; ++k) g[k] = spectrum[k].real();
  return g;
}

double ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

}  // namespace

double MaskFunction::gain(std::size_t k, std::size_t n) const {
  const double base = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
  const auto l = static_cast<std::ptrdiff_t>(half_length);
  double acc = weights[half_length];
  for (std::ptrdiff_t j = 1; j <= l; ++j) {
    acc += 2.0 * weights[static_cast<std::size_t>(l + j)] * std::cos(base * static_cast<double>(j));
  }
  return acc;
}

void MaskFunction::validate() const {
  if (half_length < 1 || weights.size() != 2 * half_length + 1) {
    throw InvalidArgument("mask must hold 2l+1 weights with l >= 1");
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (!(weights[j] >= 0.0)) throw InvalidArgument("mask weights must be nonnegative");
    if (weights[j] != weights[weights.size() - 1 - j]) {
      throw InvalidArgument("mask must be even");
    }
    sum += weights[j];
  }
  if (std::abs(sum - 1.0) > 1e-12) throw InvalidArgument("mask weights must sum to 1");
}

MaskFunction make_mask(std::size_t l) {
  if (l < 1) throw InvalidArgument("mask half-length must be >= 1");
  // Uniform window of width l+1 convolved with itself spans 2l+1 taps.
  const double width = static_cast<double>(l + 1);
  MaskFunction w{std::vector<double>(2 * l + 1), l};
  for (std::size_t i = 0; i <= l; ++i) {
    const double v = static_cast<double>(i + 1) / (width * width);
    w.weights[i] = v;
    w.weights[2 * l - i] = v;
  }
  return w;
}

std::string_view to_string(MaskLengthRule rule) {
  switch (rule) {
    case MaskLengthRule::fixed0: return "0";
    case MaskLengthRule::fixed1: return "1";
    case MaskLengthRule::ave: return "ave";
    case MaskLengthRule::almost_min: return "almost_min";
  }
  return "?";
}

MaskLengthRule parse_mask_rule(std::string_view text) {
  const auto t = lower(text);
  if (t == "0" || t == "fixed0") return MaskLengthRule::fixed0;
  if (t == "1" || t == "fixed1") return MaskLengthRule::fixed1;
  if (t == "ave") return MaskLengthRule::ave;
  if (t == "almost_min") return MaskLengthRule::almost_min;
  throw InvalidArgument("unknown alpha '" + std::string(text) +
                        "' (expected 0, 1, ave or almost_min)");
}

void IFSettings::validate() const {
  if (!(delta > 0.0)) throw InvalidArgument("IF delta must be > 0");
  if (ext_points < 2) throw InvalidArgument("IF ext_points must be >= 2");
  if (n_imfs < 1) throw InvalidArgument("IF n_imfs must be >= 1");
  if (max_inner < 1) throw InvalidArgument("IF max_inner must be >= 1");
  if (!(xi > 0.0) || !std::isfinite(xi)) throw InvalidArgument("IF xi must be > 0");
  for (auto l : mask_lengths_override) {
    if (l < 1) throw InvalidArgument("IF mask length override values must be >= 1");
  }
}

MaskFunction IFSettings::mask(std::size_t half_length) const {
  if (!mask_factory) return make_mask(half_length);
  auto w = mask_factory(half_length);
  w.validate();
  if (w.half_length != half_length) {
    throw InvalidArgument("mask factory returned half-length " + std::to_string(w.half_length) +
                          " for request " + std::to_string(half_length));
  }
  return w;
}

double percentile(std::vector<double> v, double p) {
  if (v.empty()) throw InvalidArgument("percentile of an empty set");
  std::sort(v.begin(), v.end());
  const double pos = p / 100.0 * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

std::size_t mask_length_from_extrema(std::span<const std::size_t> pos,
                                     std::size_t length, MaskLengthRule rule,
                                     double xi) {
  if (pos.size() < 2) {
    throw TooFewExtrema("mask length needs at least 2 extrema, found " +
                        std::to_string(pos.size()));
  }
  std::vector<double> d(pos.size() - 1);
  for (std::size_t i = 1; i < pos.size(); ++i) {
    d[i - 1] = static_cast<double>(pos[i] - pos[i - 1]);
  }
  double raw = 0.0;
  switch (rule) {
    case MaskLengthRule::fixed0:
      raw = xi * *std::min_element(d.begin(), d.end());
      break;
    case MaskLengthRule::fixed1:
      raw = xi * *std::max_element(d.begin(), d.end());
      break;
    case MaskLengthRule::ave:
      raw = 2.0 * xi * static_cast<double>(length) / static_cast<double>(pos.size());
      break;
    case MaskLengthRule::almost_min:
      raw = 2.0 * xi * percentile(std::move(d), 30.0);
      break;
  }
  const double cap = std::max<double>(1.0, static_cast<double>((length - 1) / 2));
  return static_cast<std::size_t>(std::clamp(std::round(raw), 1.0, cap));
}

std::size_t mask_length(const Signal& s, const IFSettings& cfg) {
  const auto pos = extrema(s).merged();
  return mask_length_from_extrema(pos, s.size(), cfg.alpha, cfg.xi);
}

std::vector<double> moving_average_direct(std::span<const double> s,
                                          const MaskFunction& w,
                                          BoundaryExtension ext) {
  check_mask_fits(w, s.size());
  const auto padded = extend(s, ext, w.half_length);
  std::vector<double> out(s.size());
  kernels::correlate(padded, w.weights, out);
  return out;
}

std::vector<double> moving_average_fft(std::span<const double> s, const MaskFunction& w) {
  check_mask_fits(w, s.size());
  const auto g = circular_gains(w, s.size());
  auto spec = fft::forward(s);
  for (std::size_t k = 0; k < spec.size(); ++k) spec[k] *= g[k];
  const auto back = fft::inverse(spec);
  std::vector<double> out(s.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = back[i].real();
  return out;
}

std::vector<double> moving_average(std::span<const double> s, const MaskFunction& w,
                                   BoundaryExtension ext) {
  if (use_fft(s.size(), w, ext)) return moving_average_fft(s, w);
  return moving_average_direct(s, w, ext);
}

Signal moving_average(const Signal& s, const MaskFunction& w, BoundaryExtension ext) {
  return s.with_samples(moving_average(s.samples(), w, ext));
}

IfExtraction if_extract(const Signal& s, std::size_t half_length, const IFSettings& cfg) {
  cfg.validate();
  const auto w = cfg.mask(half_length);
  check_mask_fits(w, s.size());
  IfExtraction out{s, 0, StopReason::max_inner_reached};
  if (norm2(s) == 0.0) {
    out.stop_reason = StopReason::delta_reached;
    return out;
  }

  if (use_fft(s.size(), w, cfg.extension)) {
    // Under periodic extension each step scales DFT mode k by (1 - g_k), so
    // the whole inner loop runs on the spectrum; norms follow from Parseval.
    const auto g = circular_gains(w, s.size());
    auto spec = fft::forward(s.samples());
    for (int it = 1; it <= cfg.max_inner; ++it) {
      double num = 0.0;
      double den = 0.0;
      for (std::size_t k = 0; k < spec.size(); ++k) {
        const double p = std::norm(spec[k]);
        num += g[k] * g[k] * p;
        den += p;
        spec[k] *= 1.0 - g[k];
      }
      out.iterations = it;
      if (ratio(std::sqrt(num), std::sqrt(den)) < cfg.delta) {
        out.stop_reason = StopReason::delta_reached;
        break;
      }
    }
    const auto back = fft::inverse(spec);
    std::vector<double> h(s.size());
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = back[i].real();
    out.imf = s.with_samples(std::move(h));
    return out;
  }

  std::vector<double> h = s.values();
  for (int it = 1; it <= cfg.max_inner; ++it) {
    const auto m = moving_average_direct(h, w, cfg.extension);
    const double r = ratio(norm2(m), norm2(h));
    for (std::size_t i = 0; i < h.size(); ++i) h[i] -= m[i];
    out.iterations = it;
    if (r < cfg.delta) {
      out.stop_reason = StopReason::delta_reached;
      break;
    }
  }
  out.imf = s.with_samples(std::move(h));
  return out;
}

Decomposition iterative_filtering(const Signal& s, const IFSettings& cfg) {
  cfg.validate();
  std::vector<double> rest = s.values();
  Decomposition d{{}, s, {}};
  const double negligible = kNegligibleImf * max_abs(s.samples());

  while (static_cast<int>(d.imfs.size()) < cfg.n_imfs) {
    const auto ext = extrema(rest);
    if (static_cast<int>(ext.count()) < cfg.ext_points) break;
    const std::size_t k = d.imfs.size();
    const std::size_t l = k < cfg.mask_lengths_override.size()
                              ? cfg.mask_lengths_override[k]
                              : mask_length_from_extrema(ext.merged(), rest.size(),
                                                         cfg.alpha, cfg.xi);
    auto x = if_extract(s.with_samples(rest), l, cfg);
    if (max_abs(x.imf.samples()) <= negligible) break;
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= x.imf[i];
    d.meta.push_back({x.iterations, l, x.stop_reason});
    d.imfs.push_back(std::move(x.imf));
  }
  d.residual = s.with_samples(std::move(rest));
  return d;
}

}  // namespace imfkit
