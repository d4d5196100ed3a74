// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#include "imfkit/emd.hpp"

#include <string>

#include "imfkit/spline.hpp"

namespace imfkit {
namespace {

// Knots for one envelope: the extrema themselves plus up to two boundary
// knots on each side according to `boundary`.
NaturalCubicSpline envelope_spline(std::span<const double> s,
                                   const std::vector<std::size_t>& idx,
                                   BoundaryExtension boundary) {
  const auto n = static_cast<double>(s.size());
  const std::size_t k = idx.size();
  const std::size_t m = std::min<std::size_t>(2, k);
  std::vector<double> x;
  std::vector<double> y;
  x.reserve(k + 4);
  y.reserve(k + 4);

  auto at = [&](std::size_t i) { return s[idx[i]]; };
  auto pos = [&](std::size_t i) { return static_cast<double>(idx[i]); };

  switch (boundary) {
    case BoundaryExtension::reflection:
      for (std::size_t j = m; j-- > 0;) {
        x.push_back(-pos(j));
        y.push_back(at(j));
      }
      break;
    case BoundaryExtension::periodic:
      for (std::size_t j = k - m; j < k; ++j) {
        x.push_back(pos(j) - n);
        y.push_back(at(j));
      }
      break;
    case BoundaryExtension::constant:
      x.push_back(0.0);
      y.push_back(at(0));
      break;
  }
  for (std::size_t j = 0; j < k; ++j) {
    x.push_back(pos(j));
    y.push_back(at(j));
  }
  const double last = n - 1.0;
  switch (boundary) {
    case BoundaryExtension::reflection:
      for (std::size_t j = 0; j < m; ++j) {
        x.push_back(2.0 * last - pos(k - 1 - j));
        y.push_back(at(k - 1 - j));
      }
      break;
    case BoundaryExtension::periodic:
      for (std::size_t j = 0; j < m; ++j) {
        x.push_back(pos(j) + n);
        y.push_back(at(j));
      }
      break;
    case BoundaryExtension::constant:
      x.push_back(last);
      y.push_back(at(k - 1));
      break;
  }
  return NaturalCubicSpline(std::move(x), std::move(y));
}

bool has_envelopes(const ExtremaSet& ext) {
  return !ext.max_indices.empty() && !ext.min_indices.empty();
}

void require_envelopes(const ExtremaSet& ext) {
  if (!has_envelopes(ext)) {
    throw TooFewExtrema("envelope needs at least one maximum and one minimum (found " +
                        std::to_string(ext.max_indices.size()) + " maxima, " +
                        std::to_string(ext.min_indices.size()) + " minima)");
  }
}

std::vector<double> envelope_mean_of(std::span<const double> s,
                                     const ExtremaSet& ext,
                                     BoundaryExtension boundary) {
  require_envelopes(ext);
  const auto upper = envelope_spline(s, ext.max_indices, boundary).sample_grid(s.size());
  const auto lower = envelope_spline(s, ext.min_indices, boundary).sample_grid(s.size());
  std::vector<double> out(s.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = 0.5 * (upper[i] + lower[i]);
  return out;
}

}  // namespace

void EMDSettings::validate() const {
  if (max_imfs < 1) throw InvalidArgument("EMD max_imfs must be >= 1");
  if (max_inner < 1) throw InvalidArgument("EMD max_inner must be >= 1");
  if (!(sd_threshold > 0.0)) throw InvalidArgument("EMD sd_threshold must be > 0");
  if (min_extrema < 2) throw InvalidArgument("EMD min_extrema must be >= 2");
}

std::vector<double> envelope_mean(std::span<const double> s,
                                  BoundaryExtension boundary) {
  return envelope_mean_of(s, extrema(s), boundary);
}

Signal envelope_mean(const Signal& s, BoundaryExtension boundary) {
  return s.with_samples(envelope_mean(s.samples(), boundary));
}

Signal sift_once(const Signal& s, BoundaryExtension boundary) {
  auto h = s.values();
  const auto m = envelope_mean(s.samples(), boundary);
  for (std::size_t i = 0; i < h.size(); ++i) h[i] -= m[i];
  return s.with_samples(std::move(h));
}

ImfExtraction extract_imf(const Signal& s, const EMDSettings& cfg) {
  cfg.validate();
  std::vector<double> h = s.values();
  ImfExtraction out{s, 0, StopReason::max_inner_reached};

  for (int it = 1; it <= cfg.max_inner; ++it) {
    const auto ext = extrema(h);
    if (!has_envelopes(ext)) {
      if (it == 1) require_envelopes(ext);
      out.stop_reason = StopReason::extrema_exhausted;
      break;
    }
    const auto m = envelope_mean_of(h, ext, cfg.boundary);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      num += m[i] * m[i];
      den += h[i] * h[i];
      h[i] -= m[i];
    }
    out.iterations = it;
    const double sd = den > 0.0 ? num / den : 0.0;
    if (sd < cfg.sd_threshold) {
      out.stop_reason = StopReason::delta_reached;
      break;
    }
  }
  out.imf = s.with_samples(std::move(h));
  return out;
}

Decomposition emd(const Signal& s, const EMDSettings& cfg) {
  cfg.validate();
  std::vector<double> rest = s.values();
  Decomposition d{{}, s, {}};
  const double negligible = kNegligibleImf * max_abs(s.samples());

  while (static_cast<int>(d.imfs.size()) < cfg.max_imfs) {
    const auto ext = extrema(rest);
    // Extrema alternate, so >= 2 of them implies a maximum and a minimum.
    if (static_cast<int>(ext.count()) < cfg.min_extrema) break;
    auto x = extract_imf(s.with_samples(rest), cfg);
    if (max_abs(x.imf.samples()) <= negligible) break;
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= x.imf[i];
    d.meta.push_back({x.iterations, std::nullopt, x.stop_reason});
    d.imfs.push_back(std::move(x.imf));
  }
  d.residual = s.with_samples(std::move(rest));
  return d;
}

}  // namespace imfkit
