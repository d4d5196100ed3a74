// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

// imfkit: decompose a CSV time series into intrinsic mode functions and build
// its time-frequency spectrum.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "imfkit/run.hpp"

namespace {

using imfkit::cli::RunConfig;

void print_kv(const imfkit::io::KeyValues& kv) {
  for (const auto& [k, v] : kv) std::cout << k << " = " << v << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Empirical mode decomposition, ensemble EMD and iterative filtering of 1D signals"};
  app.require_subcommand(1);

  // decompose
  auto* dec = app.add_subcommand("decompose", "Decompose a CSV signal into IMFs");
  std::string method;
  std::string input;
  std::string out_dir;
  std::string settings_file;
  std::optional<std::string> value_column;
  std::optional<std::string> time_column;
  bool plot = false;
  std::size_t bins = 128;
  std::string estimator = "hilbert";
  bool energy = false;
  int threads = 0;
  // Flag name -> settings key; applied after the settings file.
  const std::vector<std::pair<std::string, std::string>> method_flags = {
      {"delta", "IF.delta"},           {"ext-points", "IF.ExtPoints"},
      {"extension", "IF.extensionType"}, {"alpha", "IF.alpha"},
      {"xi", "IF.Xi"},                 {"mask-lengths", "IF.MaskLengths"},
      {"nstd", "EEMD.Nstd"},           {"ne", "EEMD.NE"},
      {"seed", "EEMD.seed"},           {"num-imfs", "EEMD.NIMFs"},
      {"max-imfs", "EMD.MaxIMFs"},     {"sd-threshold", "EMD.SDThreshold"},
      {"min-extrema", "EMD.MinExtrema"}, {"boundary", "EMD.boundary"},
      {"n-imfs", "nimfs"},             {"max-inner", "maxinner"},
  };
  std::map<std::string, std::string> flag_values;

  dec->add_option("--method", method, "emd, eemd or if")->required();
  dec->add_option("--input", input, "CSV file (value, or time,value)")->required();
  dec->add_option("--out", out_dir, "Output directory")->required();
  dec->add_option("--settings", settings_file,
                  "key = value file, or Settings_IF('IF.Xi',3,...) calls");
  dec->add_option("--value-column", value_column, "Value column (header name or 0-based index)");
  dec->add_option("--time-column", time_column, "Time column (name, index or 'none')");
  dec->add_flag("--plot", plot, "Also write decomposition.svg and spectrum.svg");
  dec->add_option("--bins", bins, "Spectrum frequency bins")->capture_default_str();
  dec->add_option("--estimator", estimator, "hilbert or derivative")->capture_default_str();
  dec->add_flag("--energy", energy, "Weight the spectrum by squared amplitude");
  dec->add_option("--threads", threads, "Worker threads (0 = all)")->capture_default_str();
  for (const auto& [flag, key] : method_flags) {
    dec->add_option_function<std::string>(
        "--" + flag, [&flag_values, flag = flag](const std::string& v) { flag_values[flag] = v; },
        "Sets " + key);
  }

  // spectrum
  auto* spec = app.add_subcommand("spectrum", "Rebuild IF traces and spectrum from imfs.csv");
  imfkit::cli::SpectrumRequest sreq;
  std::string spec_dir;
  std::string spec_estimator = "hilbert";
  bool spec_energy = false;
  spec->add_option("--in", spec_dir, "Directory holding imfs.csv")->required();
  spec->add_option("--bins", sreq.bins, "Frequency bins")->capture_default_str();
  spec->add_option("--estimator", spec_estimator, "hilbert or derivative")->capture_default_str();
  spec->add_flag("--energy", spec_energy, "Weight by squared amplitude");
  spec->add_flag("--plot", sreq.plot, "Also write spectrum.svg");
  spec->add_option("--threads", sreq.threads, "Worker threads (0 = all)");

  // info
  auto* info = app.add_subcommand("info", "Length, dt, extrema count and std of a CSV signal");
  std::string info_input;
  imfkit::io::ColumnSelection info_columns;
  info->add_option("--input", info_input, "CSV file")->required();
  info->add_option("--value-column", info_columns.value_column, "Value column");
  info->add_option("--time-column", info_columns.time_column, "Time column");

  // defaults
  auto* defaults = app.add_subcommand("defaults", "Print the default settings of each method");
  std::string defaults_method;
  defaults->add_option("--method", defaults_method, "Only this method");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*dec) {
      RunConfig cfg;
      cfg.method = imfkit::cli::parse_method(method);
      cfg.input = input;
      cfg.output_dir = out_dir;
      cfg.columns = {value_column, time_column};
      cfg.plot = plot;
      cfg.spectrum_bins = bins;
      cfg.estimator = imfkit::parse_estimator(estimator);
      cfg.weight = energy ? imfkit::SpectrumWeight::energy : imfkit::SpectrumWeight::amplitude;
      cfg.threads = threads;
      if (!settings_file.empty()) imfkit::cli::apply_settings_file(cfg, settings_file);
      for (const auto& [flag, key] : method_flags) {
        if (auto it = flag_values.find(flag); it != flag_values.end()) {
          imfkit::cli::apply_setting(cfg, key, it->second);
        }
      }
      imfkit::cli::run_decompose(cfg, std::cout);
    } else if (*spec) {
      sreq.dir = spec_dir;
      sreq.estimator = imfkit::parse_estimator(spec_estimator);
      sreq.weight = spec_energy ? imfkit::SpectrumWeight::energy : imfkit::SpectrumWeight::amplitude;
      imfkit::cli::run_spectrum(sreq, std::cout);
    } else if (*info) {
      const auto s = imfkit::io::ingest_csv(info_input, info_columns);
      print_kv(imfkit::cli::info_report(imfkit::cli::signal_info(s)));
    } else if (*defaults) {
      using imfkit::cli::Method;
      std::vector<Method> methods{Method::iterative_filtering, Method::eemd, Method::emd};
      if (!defaults_method.empty()) methods = {imfkit::cli::parse_method(defaults_method)};
      bool first = true;
      for (auto m : methods) {
        if (!first) std::cout << "\n";
        first = false;
        RunConfig cfg;
        cfg.method = m;
        print_kv(imfkit::cli::settings_report(cfg));
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "imfkit: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
