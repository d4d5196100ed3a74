// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "imfkit/eemd.hpp"
#include "test_support.hpp"

using namespace imfkit;
using namespace imfkit::testing;

namespace {

Signal fixture(std::size_t n = 1024) {
  const auto t = two_tone(n, 2.0, 40.0);
  return Signal(t.sum, 1.0 / static_cast<double>(n));
}

// EMD capped at `k` IMFs and zero-padded up to `k`.
Decomposition padded(const Signal& s, EMDSettings cfg, int k) {
  cfg.max_imfs = k;
  auto d = emd(s, cfg);
  while (static_cast<int>(d.size()) < k) {
    d.imfs.push_back(s.with_samples(std::vector<double>(s.size(), 0.0)));
  }
  return d;
}

void require_identical(const Decomposition& a, const Decomposition& b) {
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) REQUIRE(a.imfs[k].values() == b.imfs[k].values());
  REQUIRE(a.residual.values() == b.residual.values());
}

}  // namespace

TEST_CASE("default IMF count", "[eemd]") {
  EEMDSettings cfg;
  CHECK(cfg.resolved_num_imfs(1024) == 9);
  CHECK(cfg.resolved_num_imfs(1000) == 9);
  CHECK(cfg.resolved_num_imfs(2) == 1);
  cfg.num_imfs = 4;
  CHECK(cfg.resolved_num_imfs(1024) == 4);
}

TEST_CASE("nstd = 0 is plain EMD", "[eemd]") {
  const auto s = fixture();
  EEMDSettings cfg;
  cfg.nstd = 0.0;
  cfg.ne = 7;
  const auto d = eemd(s, cfg);
  require_identical(d, padded(s, cfg.emd, cfg.resolved_num_imfs(s.size())));
  CHECK(noise_member(s, cfg, 3).values() == s.values());
}

TEST_CASE("ne = 1 is EMD of the single noisy member", "[eemd]") {
  const auto s = fixture();
  EEMDSettings cfg;
  cfg.ne = 1;
  cfg.seed = 1234;
  const int k = cfg.resolved_num_imfs(s.size());
  const auto d = eemd(s, cfg);
  const auto ref = padded(noise_member(s, cfg, 0), cfg.emd, k);
  REQUIRE(d.size() == static_cast<std::size_t>(k));
  require_identical(d, ref);
}

TEST_CASE("noise_member", "[eemd][noise]") {
  const auto s = fixture(1000);
  EEMDSettings cfg;
  cfg.seed = 77;
  CHECK(noise_member(s, cfg, 5).values() == noise_member(s, cfg, 5).values());
  CHECK(noise_member(s, cfg, 5).values() != noise_member(s, cfg, 6).values());
  CHECK_THROWS_AS(noise_member(s, cfg, -1), InvalidArgument);
  CHECK_THROWS_AS(noise_member(s, cfg, cfg.ne), InvalidArgument);
  CHECK_THROWS_AS(noise_member(Signal({2, 2, 2, 2}), cfg, 0), ZeroVarianceSignal);

  // Law of large numbers on 10^6 samples.
  std::vector<double> big(1'000'000);
  for (std::size_t i = 0; i < big.size(); ++i) big[i] = std::sin(0.001 * static_cast<double>(i));
  const Signal sb(big);
  const auto noisy = noise_member(sb, cfg, 0);
  std::vector<double> diff(big.size());
  for (std::size_t i = 0; i < big.size(); ++i) diff[i] = noisy[i] - big[i];
  const double target = cfg.nstd * stddev(sb.samples());
  CHECK(std::abs(stddev(diff) - target) <= 0.02 * target);
  CHECK(std::abs(mean(diff)) < 0.01 * target);
}

TEST_CASE("eemd rejects a constant signal", "[eemd]") {
  CHECK_THROWS_AS(eemd(Signal({1, 1, 1, 1, 1, 1})), ZeroVarianceSignal);
  EEMDSettings bad;
  bad.ne = 0;
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  bad = {};
  bad.nstd = -0.1;
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
}

TEST_CASE("eemd output shape and statistical reconstruction", "[eemd]") {
  const auto s = fixture(1024);
  EEMDSettings cfg;
  cfg.ne = 40;
  cfg.seed = 9;
  const auto d = eemd(s, cfg);
  CHECK(d.size() == static_cast<std::size_t>(cfg.resolved_num_imfs(s.size())));
  CHECK(d.meta.size() == d.size());
  const auto r = d.reconstruct();
  std::vector<double> err(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) err[i] = r[i] - s[i];
  const double rms = compensated_norm(err) / std::sqrt(static_cast<double>(err.size()));
  CHECK(rms <= 3.0 * cfg.nstd * stddev(s.samples()) / std::sqrt(static_cast<double>(cfg.ne)));
}

TEST_CASE("eemd is bit-identical across thread counts and the serial path", "[eemd][determinism]") {
  const auto s = fixture(512);
  EEMDSettings cfg;
  cfg.ne = 13;  // not a multiple of the block size
  cfg.seed = 2026;
  const auto ref = serial::eemd(s, cfg);
  for (int threads : {1, 2, 4, 8}) {
    INFO("threads = " << threads);
    require_identical(eemd(s, cfg, threads), ref);
  }
  require_identical(eemd(s, cfg), ref);
}

TEST_CASE("scaling the input keeps each IMF's argmax on the noise-free path", "[eemd][property]") {
  const auto s = fixture(1024);
  EEMDSettings cfg;
  cfg.nstd = 0.0;
  const auto base = eemd(s, cfg);
  for (double c : {0.5, 3.0, 1000.0}) {
    auto x = s.values();
    for (auto& v : x) v *= c;
    const auto scaled = eemd(s.with_samples(x), cfg);
    REQUIRE(scaled.size() == base.size());
    for (std::size_t k = 0; k < base.size(); ++k) {
      const auto argmax = [](const Signal& v) {
        const auto sp = v.samples();
        return std::max_element(sp.begin(), sp.end()) - sp.begin();
      };
      if (max_abs(base.imfs[k].samples()) == 0.0) continue;
      CHECK(argmax(base.imfs[k]) == argmax(scaled.imfs[k]));
    }
  }
}
