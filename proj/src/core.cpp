// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#include "imfkit/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace imfkit {

Signal::Signal(std::vector<double> samples, double dt, double t0)
    : samples_(std::move(samples)), dt_(dt), t0_(t0) {
  if (samples_.size() < 2) {
    throw InvalidArgument("signal needs at least 2 samples, got " +
                          std::to_string(samples_.size()));
  }
  if (!(dt_ > 0.0) || !std::isfinite(dt_)) {
    throw InvalidArgument("sample spacing must be positive and finite");
  }
  if (!std::isfinite(t0_)) throw InvalidArgument("t0 must be finite");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i])) {
      throw InvalidArgument("non-finite sample at index " + std::to_string(i));
    }
  }
}

std::string_view to_string(BoundaryExtension kind) {
  switch (kind) {
    case BoundaryExtension::constant: return "constant";
    case BoundaryExtension::periodic: return "periodic";
    case BoundaryExtension::reflection: return "reflection";
  }
  return "?";
}

BoundaryExtension parse_boundary(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (t == "constant" || t == "c") return BoundaryExtension::constant;
  if (t == "periodic" || t == "periodical" || t == "p") return BoundaryExtension::periodic;
  if (t == "reflection" || t == "reflect" || t == "r") return BoundaryExtension::reflection;
  throw InvalidArgument("unknown extension type '" + std::string(text) +
                        "' (expected constant, periodic or reflection)");
}

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::delta_reached: return "delta_reached";
    case StopReason::max_inner_reached: return "max_inner_reached";
    case StopReason::extrema_exhausted: return "extrema_exhausted";
  }
  return "?";
}

std::vector<std::size_t> ExtremaSet::merged() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  std::merge(max_indices.begin(), max_indices.end(), min_indices.begin(),
             min_indices.end(), std::back_inserter(out));
  return out;
}

std::vector<std::size_t> Decomposition::mask_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& m : meta) {
    if (m.mask_half_length) out.push_back(*m.mask_half_length);
  }
  return out;
}

std::vector<double> Decomposition::reconstruct() const {
  std::vector<double> sum(residual.values());
  for (const auto& imf : imfs) {
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += imf[i];
  }
  return sum;
}

ExtremaSet extrema(std::span<const double> x) {
  ExtremaSet out;
  const std::size_t n = x.size();
  if (n < 3) return out;

  // Walk runs of equal values; a run strictly inside the signal whose
  // neighbours are both lower (higher) is a maximum (minimum).
  std::size_t i = 1;
  while (i + 1 < n) {
    std::size_t j = i;
    while (j + 1 < n && x[j + 1] == x[i]) ++j;
    if (j + 1 >= n) break;  // run touches the right endpoint
    const double left = x[i - 1];
    const double right = x[j + 1];
    const std::size_t mid = i + (j - i) / 2;
    if (x[i] > left && x[i] > right) {
      out.max_indices.push_back(mid);
    } else if (x[i] < left && x[i] < right) {
      out.min_indices.push_back(mid);
    }
    i = j + 1;
  }
  return out;
}

std::size_t extension_index(std::ptrdiff_t i, std::size_t n,
                            BoundaryExtension mode) {
  const auto sn = static_cast<std::ptrdiff_t>(n);
  switch (mode) {
    case BoundaryExtension::constant:
      return static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(i, 0, sn - 1));
    case BoundaryExtension::periodic: {
      std::ptrdiff_t m = i % sn;
      if (m < 0) m += sn;
      return static_cast<std::size_t>(m);
    }
    case BoundaryExtension::reflection: {
      // Mirror about both endpoints without repeating them: period 2(n-1).
      const std::ptrdiff_t period = 2 * (sn - 1);
      std::ptrdiff_t m = i % period;
      if (m < 0) m += period;
      if (m >= sn) m = period - m;
      return static_cast<std::size_t>(m);
    }
  }
  return 0;
}

std::vector<double> extend(std::span<const double> x, BoundaryExtension mode,
                           std::size_t pad) {
  if (pad < 1) throw InvalidArgument("extension pad must be >= 1");
  if (x.size() < 2) throw InvalidArgument("cannot extend fewer than 2 samples");
  const auto p = static_cast<std::ptrdiff_t>(pad);
  std::vector<double> out(x.size() + 2 * pad);
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = x[extension_index(static_cast<std::ptrdiff_t>(k) - p, x.size(), mode)];
  }
  return out;
}

Signal extend(const Signal& s, BoundaryExtension mode, std::size_t pad) {
  return Signal(extend(s.samples(), mode, pad), s.dt(),
                s.t0() - static_cast<double>(pad) * s.dt());
}

double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

double norm2(std::span<const double> x) {
  // Scaled by max|x| so the squares cannot overflow.
  const double scale = max_abs(x);
  if (scale == 0.0 || !std::isfinite(scale)) return scale;
  double sum = 0.0;
  for (double v : x) {
    const double r = v / scale;
    sum += r * r;
  }
  return scale * std::sqrt(sum);
}

double mean(std::span<const double> x) {
  if (x.empty()) return 0.0;
  double sum = 0.0;
  for (double v : x) sum += v;
  return sum / static_cast<double>(x.size());
}

double stddev(std::span<const double> x) {
  if (x.size() < 2) return 0.0;
  const double mu = mean(x);
  double ss = 0.0;
  for (double v : x) ss += (v - mu) * (v - mu);
  return std::sqrt(ss / static_cast<double>(x.size() - 1));
}

}  // namespace imfkit
