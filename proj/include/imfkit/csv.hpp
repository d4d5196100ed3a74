// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "imfkit/core.hpp"
#include "imfkit/specfreq.hpp"

namespace imfkit::io {

/// Columns are named by header text or by 0-based index. With no selection a
/// single column is the value (dt = 1); with two or more, column 0 is time and
/// column 1 the value. time_column "none" ignores any time column.
struct ColumnSelection {
  std::optional<std::string> value_column;
  std::optional<std::string> time_column;
};

/// Relative tolerance on sample-spacing deviations in a time column.
inline constexpr double kUniformTolerance = 1e-6;

Signal parse_csv(std::string_view text, const ColumnSelection& columns = {});
Signal ingest_csv(const std::filesystem::path& path, const ColumnSelection& columns = {});

/// Shortest decimal text that parses back to the same double.
std::string format_number(double v);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

/// imfs.csv: time, imf1..imfK, residual.
std::string components_csv(const Decomposition& d);
/// Parses components_csv output back into a decomposition (meta left empty).
Decomposition parse_components_csv(std::string_view text);

/// iftrace_k.csv: time, amplitude, frequency, valid (0/1).
std::string trace_csv(const IFTrace& trace);
/// spectrum.csv: one row per time, one column per frequency bin (header
/// holds the bin centres).
std::string spectrum_csv(const TimeFrequencyGrid& grid);

using KeyValues = std::vector<std::pair<std::string, std::string>>;
/// `key = value` lines.
std::string meta_text(const KeyValues& entries);
KeyValues parse_meta(std::string_view text);

}  // namespace imfkit::io
