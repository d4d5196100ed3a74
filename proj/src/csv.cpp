// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#include "imfkit/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace imfkit::io {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::optional<double> to_double(std::string_view cell) {
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  double v = 0.0;
  const auto* end = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(cell.data(), end, v);
  if (ec != std::errc() || ptr != end || cell.empty()) return std::nullopt;
  return v;
}

struct Row {
  std::size_t line;
  std::vector<std::string_view> cells;
};

std::size_t resolve_column(const std::string& spec, const std::vector<std::string>& header,
                           std::size_t ncols) {
  if (auto it = std::find(header.begin(), header.end(), spec); it != header.end()) {
    return static_cast<std::size_t>(it - header.begin());
  }
  std::size_t idx = 0;
  auto [ptr, ec] = std::from_chars(spec.data(), spec.data() + spec.size(), idx);
  if (ec != std::errc() || ptr != spec.data() + spec.size()) {
    throw InvalidArgument("unknown column '" + spec + "'");
  }
  if (idx >= ncols) {
    throw InvalidArgument("column index " + spec + " out of range (" + std::to_string(ncols) +
                          " columns)");
  }
  return idx;
}

}  // namespace

Signal parse_csv(std::string_view text, const ColumnSelection& columns) {
  std::vector<Row> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const auto line = trim(text.substr(start, end - start));
    if (!line.empty() && line.front() != '#') rows.push_back({line_no, split(line, ',')});
    start = end + 1;
  }
  if (rows.empty()) throw TooShort("input holds no data rows");

  std::vector<std::string> header;
  if (!to_double(rows.front().cells.front())) {
    for (auto c : rows.front().cells) header.emplace_back(c);
    rows.erase(rows.begin());
  }
  if (rows.size() < 2) {
    throw TooShort("input needs at least 2 data rows, found " + std::to_string(rows.size()));
  }
  const std::size_t ncols = rows.front().cells.size();

  std::optional<std::size_t> time_col;
  std::size_t value_col = 0;
  if (columns.value_column) {
    value_col = resolve_column(*columns.value_column, header, ncols);
  } else if (ncols >= 2) {
    value_col = 1;
  }
  if (columns.time_column) {
    if (*columns.time_column != "none") {
      time_col = resolve_column(*columns.time_column, header, ncols);
    }
  } else if (ncols >= 2 && value_col != 0) {
    time_col = 0;
  }

  std::vector<double> values;
  std::vector<double> times;
  values.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.cells.size() != ncols) {
      throw ParseError("line " + std::to_string(r.line) + ": expected " + std::to_string(ncols) +
                           " columns, found " + std::to_string(r.cells.size()),
                       r.line);
    }
    auto cell = [&](std::size_t c) {
      auto v = to_double(r.cells[c]);
      if (!v || !std::isfinite(*v)) {
        throw ParseError("line " + std::to_string(r.line) + ": cannot parse '" +
                             std::string(r.cells[c]) + "' as a finite number",
                         r.line);
      }
      return *v;
    };
    values.push_back(cell(value_col));
    if (time_col) times.push_back(cell(*time_col));
  }

  if (!time_col) return Signal(std::move(values));

  // Steps are compared with the median step so the error points at the
  // irregular row rather than at the first row that disagrees with an
  // average skewed by the gap.
  std::vector<double> steps(times.size() - 1);
  for (std::size_t i = 1; i < times.size(); ++i) steps[i - 1] = times[i] - times[i - 1];
  std::vector<double> sorted = steps;
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(sorted.size() / 2),
                   sorted.end());
  const double typical = sorted[sorted.size() / 2];
  if (!(typical > 0.0)) {
    throw NonUniformSampling("time column must be strictly increasing", rows[1].line);
  }
  for (std::size_t i = 1; i < times.size(); ++i) {
    const double step = steps[i - 1];
    if (std::abs(step - typical) > kUniformTolerance * typical) {
      throw NonUniformSampling("line " + std::to_string(rows[i].line) +
                                   ": non-uniform sampling (step " + format_number(step) +
                                   ", expected " + format_number(typical) + ")",
                               rows[i].line);
    }
  }
  const double dt = (times.back() - times.front()) / static_cast<double>(times.size() - 1);
  return Signal(std::move(values), dt, times.front());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

Signal ingest_csv(const std::filesystem::path& path, const ColumnSelection& columns) {
  return parse_csv(read_file(path), columns);
}

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

std::string components_csv(const Decomposition& d) {
  std::string out = "time";
  for (std::size_t k = 0; k < d.imfs.size(); ++k) out += ",imf" + std::to_string(k + 1);
  out += ",residual\n";
  for (std::size_t i = 0; i < d.residual.size(); ++i) {
    out += format_number(d.residual.time(i));
    for (const auto& imf : d.imfs) {
      out += ',';
      out += format_number(imf[i]);
    }
    out += ',';
    out += format_number(d.residual[i]);
    out += '\n';
  }
  return out;
}

Decomposition parse_components_csv(std::string_view text) {
  const auto nl = text.find('\n');
  const auto header = split(trim(text.substr(0, nl)), ',');
  if (header.size() < 2 || header.front() != "time" || header.back() != "residual") {
    throw ParseError("components file must start with 'time,...,residual'", 1);
  }
  const std::size_t ncomp = header.size() - 1;
  std::vector<Signal> cols;
  for (std::size_t c = 0; c < ncomp; ++c) {
    cols.push_back(parse_csv(text, {std::to_string(c + 1), "0"}));
  }
  Decomposition d{{}, cols.back(), {}};
  cols.pop_back();
  d.imfs = std::move(cols);
  return d;
}

std::string trace_csv(const IFTrace& trace) {
  std::string out = "time,amplitude,frequency,valid\n";
  for (std::size_t i = 0; i < trace.amplitude.size(); ++i) {
    out += format_number(trace.amplitude.time(i));
    out += ',';
    out += format_number(trace.amplitude[i]);
    out += ',';
    out += format_number(trace.frequency[i]);
    out += trace.valid[i] ? ",1\n" : ",0\n";
  }
  return out;
}

std::string spectrum_csv(const TimeFrequencyGrid& g) {
  std::string out = "time";
  for (std::size_t b = 0; b < g.bins(); ++b) {
    out += ',';
    out += format_number(0.5 * (g.freq_edges[b] + g.freq_edges[b + 1]));
  }
  out += '\n';
  for (std::size_t t = 0; t < g.times.size(); ++t) {
    out += format_number(g.times[t]);
    for (std::size_t b = 0; b < g.bins(); ++b) {
      out += ',';
      out += format_number(g.at(t, b));
    }
    out += '\n';
  }
  return out;
}

std::string meta_text(const KeyValues& entries) {
  std::string out;
  for (const auto& [k, v] : entries) out += k + " = " + v + "\n";
  return out;
}

KeyValues parse_meta(std::string_view text) {
  KeyValues out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    out.emplace_back(std::string(trim(std::string_view(line).substr(0, eq))),
                     std::string(trim(std::string_view(line).substr(eq + 1))));
  }
  return out;
}

}  // namespace imfkit::io
