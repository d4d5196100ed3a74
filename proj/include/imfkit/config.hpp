// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "imfkit/csv.hpp"
#include "imfkit/eemd.hpp"
#include "imfkit/emd.hpp"
#include "imfkit/iterfilt.hpp"
#include "imfkit/specfreq.hpp"

namespace imfkit::cli {

enum class Method { emd, eemd, iterative_filtering };

std::string_view to_string(Method m);
Method parse_method(std::string_view text);

struct RunConfig {
  Method method = Method::iterative_filtering;
  std::filesystem::path input;
  std::filesystem::path output_dir;
  io::ColumnSelection columns;

  EMDSettings emd;    // also the per-member settings for eemd
  EEMDSettings eemd;  // eemd.emd is ignored; `emd` above is used
  IFSettings ifs;

  bool plot = false;
  std::size_t spectrum_bins = 128;
  IFEstimator estimator = IFEstimator::hilbert;
  SpectrumWeight weight = SpectrumWeight::amplitude;
  int threads = 0;

  EEMDSettings effective_eemd() const;
};

/// Applies one setting. Keys are case-insensitive and '_', '-' and spaces are
/// ignored, so "IF.Xi", "if.xi", "IF.ExtPoints" and "ext_points" all work.
/// An "IF.", "EEMD." or "EMD." prefix pins the family;
/// bare keys resolve against the configured method. Keys from another
/// method's family and unknown keys throw InvalidArgument.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Settings file: `key = value` lines ('#' or '%' comments), or calls in the
/// form Settings_IF('IF.NIMFs',100,'IF.Xi',3).
void apply_settings_text(RunConfig& cfg, std::string_view text);
void apply_settings_file(RunConfig& cfg, const std::filesystem::path& path);

/// Effective settings of the configured method, in the order written to
/// meta.txt.
io::KeyValues settings_report(const RunConfig& cfg);

}  // namespace imfkit::cli
