// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failures (capped at 1). Criterion 10 needs real data and runs only
// when IMFKIT_LOD_CSV / IMFKIT_VOSTOK_CSV point at CSV files.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "imfkit/csv.hpp"
#include "imfkit/eemd.hpp"
#include "imfkit/emd.hpp"
#include "imfkit/iterfilt.hpp"
#include "imfkit/specfreq.hpp"
#include "test_support.hpp"

using namespace imfkit;
using namespace imfkit::testing;

namespace {

int failures = 0;

struct Outcome {
  bool ok = true;
  std::string detail;
};

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!out.ok) ++failures;
  std::printf("%s [%d] %s (%s; %.2f s)\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), out.detail.c_str(), secs);
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(4);
  ss << v;
  return ss.str();
}

// Random test signal: noise, a few tones and a trend in random proportions.
std::vector<double> random_signal(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto x = gaussian_noise(n, rng, u(rng));
  const int tones = static_cast<int>(rng() % 4);
  for (int k = 0; k < tones; ++k) {
    const double cycles = 1.0 + u(rng) * static_cast<double>(n) / 8.0;
    const double amp = 5.0 * u(rng);
    const double ph = 6.28 * u(rng);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += amp * std::sin(2.0 * kPi * cycles * static_cast<double>(i) / static_cast<double>(n) + ph);
    }
  }
  const double slope = 4.0 * (u(rng) - 0.5);
  for (std::size_t i = 0; i < n; ++i) x[i] += slope * static_cast<double>(i) / static_cast<double>(n);
  return x;
}

std::string serialize(const Decomposition& d) { return io::components_csv(d); }

Outcome criterion1() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20260001);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 64 + rng() % (4096 - 64 + 1);
    const auto x = random_signal(rng, n);
    const Signal s(x);
    const double scale = max_abs(x);
    IFSettings ifs;
    ifs.n_imfs = 10;
    ifs.alpha = static_cast<MaskLengthRule>(trial % 4);
    ifs.extension = static_cast<BoundaryExtension>(trial % 3);
    for (const auto& d : {emd(s), iterative_filtering(s, ifs)}) {
      worst = std::max(worst, max_abs_diff(d.reconstruct(), x) / scale);
    }
  }
  const double secs = seconds_since(start);
  return {worst <= 1e-10 && secs < 60.0,
          "worst relative error " + fmt(worst) + ", " + fmt(secs) + " s of 60"};
}

Outcome criterion2() {
  const auto start = std::chrono::steady_clock::now();
  const auto t = two_tone(2048);
  const Signal s(t.sum, 1.0 / 2048.0);
  const double bound = 3.0 * 0.2 * stddev(s.samples()) / std::sqrt(100.0);
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EEMDSettings cfg;
    cfg.nstd = 0.2;
    cfg.ne = 100;
    cfg.seed = seed;
    const auto r = eemd(s, cfg).reconstruct();
    std::vector<double> err(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) err[i] = r[i] - t.sum[i];
    worst = std::max(worst, compensated_norm(err) / std::sqrt(static_cast<double>(err.size())));
  }
  const double secs = seconds_since(start);
  return {worst <= bound && secs < 120.0,
          "worst RMS " + fmt(worst) + " vs bound " + fmt(bound) + ", " + fmt(secs) + " s of 120"};
}

Outcome criterion3() {
  const auto t = two_tone(1024);
  const Signal s(t.sum, 1.0 / 1024.0);
  EEMDSettings cfg;
  cfg.ne = 50;
  cfg.seed = 42;
  const auto ref = serialize(eemd(s, cfg, 1));
  bool same = true;
  for (int threads : {4, 8}) same = same && serialize(eemd(s, cfg, threads)) == ref;
  same = same && serialize(serial::eemd(s, cfg)) == ref;
  return {same, same ? "1, 4, 8 threads and serial reference byte-identical" : "outputs differ"};
}

Outcome criterion4() {
  std::vector<std::size_t> lengths{1, 2};
  while (lengths.back() < 256) {
    const auto next = lengths[lengths.size() - 1] + lengths[lengths.size() - 2];
    lengths.push_back(std::min<std::size_t>(next, 256));
  }
  double worst_sum = 0.0, worst_re = 0.0, worst_im = 0.0;
  bool symmetric = true, nonneg = true;
  for (auto l : lengths) {
    const auto m = make_mask(l);
    double sum = 0.0;
    for (std::size_t j = 0; j < m.weights.size(); ++j) {
      sum += m.weights[j];
      nonneg = nonneg && m.weights[j] >= 0.0;
      symmetric = symmetric && m.weights[j] == m.weights[m.weights.size() - 1 - j];
    }
    worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
    for (const auto& c : naive_dft(wrapped_mask(m, 4 * l))) {
      worst_re = std::min(worst_re, c.real());
      worst_im = std::max(worst_im, std::abs(c.imag()));
    }
  }
  const bool ok = worst_sum <= 1e-12 && symmetric && nonneg && worst_re >= -1e-12 && worst_im <= 1e-12;
  return {ok, std::to_string(lengths.size()) + " lengths; |sum-1| " + fmt(worst_sum) + ", min Re " +
                  fmt(worst_re) + ", max |Im| " + fmt(worst_im)};
}

Outcome criterion5() {
  std::mt19937_64 rng(20260005);
  IFSettings cfg;
  cfg.max_inner = 1;
  cfg.extension = BoundaryExtension::periodic;
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    // Every tenth signal is long enough for the FFT route.
    const std::size_t n = trial % 10 == 9 ? 1024 + rng() % 512 : 32 + rng() % 480;
    const std::size_t l = 1 + rng() % (n / 2 - 1);
    const auto x = gaussian_noise(n, rng);
    const auto out = if_extract(Signal(x), l, cfg);
    const auto before = naive_dft(x);
    const auto after = naive_dft(out.imf.samples());
    const auto gain = naive_dft(wrapped_mask(make_mask(l), n));
    for (std::size_t k = 0; k < n; ++k) {
      worst = std::max(worst, std::abs(after[k] - (1.0 - gain[k].real()) * before[k]));
    }
  }
  return {worst <= 1e-10, "worst mode error " + fmt(worst)};
}

Outcome criterion6() {
  std::mt19937_64 rng(20260006);
  std::uniform_real_distribution<double> xi_dist(1.1, 3.0);
  int mismatches = 0, cases = 0;
  while (cases < 500) {
    const std::size_t len = 20 + rng() % 10000;
    const std::size_t count = 2 + rng() % 100;
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < count; ++i) pos.push_back(1 + rng() % (len - 2));
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    if (pos.size() < 2) continue;
    ++cases;
    const double xi = xi_dist(rng);
    for (auto rule : {MaskLengthRule::ave, MaskLengthRule::almost_min}) {
      if (mask_length_from_extrema(pos, len, rule, xi) != mask_length_oracle(pos, len, rule, xi)) ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(cases) + " configurations, " + std::to_string(mismatches) + " mismatches"};
}

Outcome recovery(const Decomposition& d, const TwoTone& t, double secs) {
  double fast = 0.0, slow = 0.0;
  if (d.size() >= 1) fast = central_correlation(d.imfs[0].samples(), t.fast);
  for (std::size_t k = 1; k < d.size(); ++k) slow = std::max(slow, central_correlation(d.imfs[k].samples(), t.slow));
  return {fast >= 0.95 && slow >= 0.95 && secs < 10.0,
          std::to_string(d.size()) + " IMFs; first vs 40 Hz " + fmt(fast) + ", best later vs 2 Hz " + fmt(slow) +
              ", " + fmt(secs) + " s"};
}

Outcome criterion7_emd() {
  const auto t = two_tone(4096);
  const auto start = std::chrono::steady_clock::now();
  const auto d = emd(Signal(t.sum, 1.0 / 4096.0));
  return recovery(d, t, seconds_since(start));
}

Outcome criterion7_if() {
  // alpha = almost_min, xi = 3, up to 100 IMFs.
  const auto t = two_tone(4096);
  IFSettings cfg;
  cfg.alpha = MaskLengthRule::almost_min;
  cfg.xi = 3.0;
  cfg.n_imfs = 100;
  const auto start = std::chrono::steady_clock::now();
  const auto d = iterative_filtering(Signal(t.sum, 1.0 / 4096.0), cfg);
  return recovery(d, t, seconds_since(start));
}

Outcome criterion8_chirp() {
  const std::size_t n = 4096;
  const double dt = 1.0 / n;
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double tt = static_cast<double>(i) * dt;
    x[i] = std::cos(2.0 * kPi * (2.0 * tt + 5.0 * tt * tt));
  }
  const auto tr = hilbert_if(Signal(x, dt));
  double worst = 0.0;
  for (std::size_t i = n / 10; i < n - n / 10; ++i) {
    if (!tr.valid[i]) continue;
    const double f = 2.0 + 10.0 * static_cast<double>(i) * dt;
    worst = std::max(worst, std::abs(tr.frequency[i] - f) / f);
  }
  return {worst <= 0.02, "worst relative error " + fmt(worst) + " on the central 80%"};
}

Outcome criterion8_tones() {
  double worst_derivative = 0.0, worst_agreement = 0.0;
  for (double f0 : {3.0, 7.5, 20.0, 55.0}) {
    std::vector<double> x(4096);
    const double dt = 1.0 / 1024.0;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::sin(2.0 * kPi * f0 * static_cast<double>(i) * dt + 0.7);
    const Signal s(x, dt);
    const auto d = derivative_if(s);
    const auto h = hilbert_if(s);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (d.valid[i]) worst_derivative = std::max(worst_derivative, std::abs(d.frequency[i] - f0) / f0);
      if (d.valid[i] && h.valid[i]) {
        worst_agreement = std::max(worst_agreement, std::abs(d.frequency[i] - h.frequency[i]) / h.frequency[i]);
      }
    }
  }
  return {worst_derivative <= 0.02 && worst_agreement <= 0.05,
          "derivative vs truth " + fmt(worst_derivative) + ", derivative vs hilbert " + fmt(worst_agreement)};
}

Outcome criterion9() {
  const std::string cmd = std::string(IMFKIT_CLI_PATH) + " defaults";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {false, "cannot run the CLI"};
  std::string text;
  std::array<char, 1024> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), got);
  if (pclose(pipe) != 0) return {false, "CLI exited nonzero"};
  const auto kv = io::parse_meta(text);
  const std::vector<std::pair<std::string, std::string>> expected{
      {"delta", "0.001"}, {"ext_points", "3"}, {"n_imfs", "1"}, {"max_inner", "200"},
      {"alpha", "ave"},   {"xi", "1.6"},       {"nstd", "0.2"}, {"ne", "100"}};
  std::string missing;
  for (const auto& e : expected) {
    if (std::find(kv.begin(), kv.end(), e) == kv.end()) missing += " " + e.first;
  }
  return {missing.empty(), missing.empty() ? "all eight defaults reported" : "missing or wrong:" + missing};
}

void criterion10() {
  const char* lod = std::getenv("IMFKIT_LOD_CSV");
  const char* vostok = std::getenv("IMFKIT_VOSTOK_CSV");
  if (lod == nullptr && vostok == nullptr) {
    std::printf("SKIP [10] real-data IMF counts (set IMFKIT_LOD_CSV and/or IMFKIT_VOSTOK_CSV)\n");
    return;
  }
  // Dataset-dependent: reported, never counted as a failure.
  const auto run = [](const char* path, MaskLengthRule alpha, std::size_t expected, const char* name) {
    try {
      IFSettings cfg;
      cfg.alpha = alpha;
      cfg.xi = 3.0;
      cfg.n_imfs = 100;
      const auto d = iterative_filtering(io::ingest_csv(path), cfg);
      std::printf("%s [10] %s: %zu IMFs + remainder (expected %zu)\n",
                  d.size() == expected ? "PASS" : "INFO", name, d.size(), expected);
    } catch (const std::exception& e) {
      std::printf("INFO [10] %s: %s\n", name, e.what());
    }
  };
  if (lod != nullptr) run(lod, MaskLengthRule::almost_min, 4, "LOD");
  if (vostok != nullptr) run(vostok, MaskLengthRule::ave, 5, "Vostok");
}

}  // namespace

int main() {
  report(1, "reconstruction exactness, EMD and IF, 200 signals", criterion1);
  report(2, "EEMD statistical reconstruction, 20 seeds", criterion2);
  report(3, "EEMD determinism across thread counts", criterion3);
  report(4, "mask validity up to l = 256", criterion4);
  report(5, "spectral contract of one IF iteration, 50 signals", criterion5);
  report(6, "mask-length formulas vs percentile oracle, 500 cases", criterion6);
  report(7, "component recovery, EMD", criterion7_emd);
  report(7, "component recovery, IF", criterion7_if);
  report(8, "hilbert_if on the linear chirp 2 + 10 t", criterion8_chirp);
  report(8, "derivative_if on tones and estimator agreement", criterion8_tones);
  report(9, "CLI reports the documented defaults", criterion9);
  criterion10();
  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
