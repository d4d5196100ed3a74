// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#pragma once

#include <filesystem>
#include <iosfwd>

#include "imfkit/config.hpp"

namespace imfkit::cli {

Decomposition decompose_signal(const Signal& s, const RunConfig& cfg);

/// Decomposes cfg.input and writes imfs.csv, meta.txt, iftrace_k.csv,
/// spectrum.csv and, with cfg.plot, decomposition.svg and spectrum.svg into
/// cfg.output_dir (created if missing).
void run_decompose(const RunConfig& cfg, std::ostream& log);

struct SpectrumRequest {
  std::filesystem::path dir;
  std::size_t bins = 128;
  IFEstimator estimator = IFEstimator::hilbert;
  SpectrumWeight weight = SpectrumWeight::amplitude;
  bool plot = false;
  int threads = 0;
};

/// Recomputes iftrace_k.csv and spectrum.csv from an existing imfs.csv.
void run_spectrum(const SpectrumRequest& req, std::ostream& log);

struct SignalInfo {
  std::size_t length = 0;
  double dt = 1.0;
  double t0 = 0.0;
  std::size_t extrema = 0;
  std::size_t maxima = 0;
  std::size_t minima = 0;
  double mean = 0.0;
  double stddev = 0.0;
};

SignalInfo signal_info(const Signal& s);
io::KeyValues info_report(const SignalInfo& info);

}  // namespace imfkit::cli
