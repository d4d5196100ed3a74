// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#include "imfkit/run.hpp"

#include <ostream>

#include "imfkit/svg.hpp"

namespace imfkit::cli {
namespace {

namespace fs = std::filesystem;

void write_spectrum_files(const fs::path& dir, const Decomposition& d, std::size_t bins,
                          IFEstimator estimator, SpectrumWeight weight, bool plot,
                          int threads) {
  const auto traces = if_traces(d, estimator, {}, threads);
  for (std::size_t k = 0; k < traces.size(); ++k) {
    io::write_file(dir / ("iftrace_" + std::to_string(k + 1) + ".csv"), io::trace_csv(traces[k]));
  }
  const auto grid = accumulate_spectrum(traces, d.residual, bins, weight);
  io::write_file(dir / "spectrum.csv", io::spectrum_csv(grid));
  if (plot) io::write_file(dir / "spectrum.svg", svg::spectrum_plot(grid));
}

}  // namespace

Decomposition decompose_signal(const Signal& s, const RunConfig& cfg) {
  switch (cfg.method) {
    case Method::emd: return emd(s, cfg.emd);
    case Method::eemd: return eemd(s, cfg.effective_eemd(), cfg.threads);
    case Method::iterative_filtering: return iterative_filtering(s, cfg.ifs);
  }
  throw InvalidArgument("unknown method");
}

void run_decompose(const RunConfig& cfg, std::ostream& log) {
  if (cfg.spectrum_bins < 1) throw InvalidArgument("spectrum bins must be >= 1");
  const Signal s = io::ingest_csv(cfg.input, cfg.columns);
  const Decomposition d = decompose_signal(s, cfg);

  fs::create_directories(cfg.output_dir);
  io::write_file(cfg.output_dir / "imfs.csv", io::components_csv(d));

  io::KeyValues meta = settings_report(cfg);
  meta.emplace_back("input", cfg.input.filename().string());
  meta.emplace_back("length", std::to_string(s.size()));
  meta.emplace_back("dt", io::format_number(s.dt()));
  meta.emplace_back("t0", io::format_number(s.t0()));
  meta.emplace_back("imf_count", std::to_string(d.imfs.size()));
  for (std::size_t k = 0; k < d.meta.size(); ++k) {
    const auto prefix = "imf" + std::to_string(k + 1) + ".";
    const auto& m = d.meta[k];
    meta.emplace_back(prefix + "iterations", std::to_string(m.inner_iterations));
    if (m.mask_half_length) {
      meta.emplace_back(prefix + "mask_half_length", std::to_string(*m.mask_half_length));
    }
    meta.emplace_back(prefix + "stop_reason", std::string(to_string(m.stop_reason)));
  }
  if (cfg.method == Method::iterative_filtering) {
    std::string lengths;
    for (auto l : d.mask_lengths()) {
      if (!lengths.empty()) lengths += ',';
      lengths += std::to_string(l);
    }
    meta.emplace_back("mask_lengths", lengths.empty() ? "none" : lengths);
  }
  meta.emplace_back("spectrum_bins", std::to_string(cfg.spectrum_bins));
  meta.emplace_back("estimator", std::string(to_string(cfg.estimator)));
  meta.emplace_back("spectrum_weight",
                    cfg.weight == SpectrumWeight::energy ? "energy" : "amplitude");
  io::write_file(cfg.output_dir / "meta.txt", io::meta_text(meta));

  write_spectrum_files(cfg.output_dir, d, cfg.spectrum_bins, cfg.estimator, cfg.weight,
                       cfg.plot, cfg.threads);
  if (cfg.plot) {
    io::write_file(cfg.output_dir / "decomposition.svg", svg::decomposition_plot(s, d));
  }
  log << to_string(cfg.method) << ": " << d.imfs.size() << " IMFs + residual written to "
      << cfg.output_dir.string() << "\n";
}

void run_spectrum(const SpectrumRequest& req, std::ostream& log) {
  if (req.bins < 1) throw InvalidArgument("spectrum bins must be >= 1");
  const auto d = io::parse_components_csv(io::read_file(req.dir / "imfs.csv"));
  write_spectrum_files(req.dir, d, req.bins, req.estimator, req.weight, req.plot, req.threads);
  log << "spectrum: " << d.imfs.size() << " IMFs, " << req.bins << " bins ("
      << to_string(req.estimator) << ") written to " << req.dir.string() << "\n";
}

SignalInfo signal_info(const Signal& s) {
  const auto ext = extrema(s);
  return {s.size(),
          s.dt(),
          s.t0(),
          ext.count(),
          ext.max_indices.size(),
          ext.min_indices.size(),
          mean(s.samples()),
          stddev(s.samples())};
}

io::KeyValues info_report(const SignalInfo& i) {
  return {{"length", std::to_string(i.length)},
          {"dt", io::format_number(i.dt)},
          {"t0", io::format_number(i.t0)},
          {"extrema", std::to_string(i.extrema)},
          {"maxima", std::to_string(i.maxima)},
          {"minima", std::to_string(i.minima)},
          {"mean", io::format_number(i.mean)},
          {"std", io::format_number(i.stddev)}};
}

}  // namespace imfkit::cli
