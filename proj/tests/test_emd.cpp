// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "imfkit/emd.hpp"
#include "test_support.hpp"

using namespace imfkit;
using namespace imfkit::testing;

namespace {

// n samples of f(t) on the closed interval [0, 1].
template <class F>
Signal sampled(std::size_t n, F f) {
  std::vector<double> x(n);
  const double dt = 1.0 / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) x[i] = f(static_cast<double>(i) * dt);
  return Signal(std::move(x), dt);
}

double central_max_abs(std::span<const double> x, double ref) {
  const std::size_t lo = x.size() / 10;
  double m = 0.0;
  for (std::size_t i = lo; i < x.size() - lo; ++i) m = std::max(m, std::abs(x[i] - ref));
  return m;
}

}  // namespace

TEST_CASE("envelope_mean of an offset tone is the offset", "[emd][envelope]") {
  const auto s = sampled(1024, [](double t) { return std::sin(2 * kPi * 4 * t) + 2.0; });
  const auto m = envelope_mean(s);
  CHECK(central_max_abs(m.samples(), 2.0) < 0.05);
}

TEST_CASE("envelope_mean reproduces a constant at the knots", "[emd][envelope]") {
  const double c = 3.25;
  std::vector<double> x(64);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = c + ((i % 2) ? 1e-3 : -1e-3);
  const auto m = envelope_mean(x);
  for (double v : m) CHECK(v == Catch::Approx(c).margin(1e-12));
}

TEST_CASE("envelope_mean of a triangle wave is near zero", "[emd][envelope]") {
  const std::size_t n = 512;
  const double amp = 1.5;
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double phase = std::fmod(static_cast<double>(i) / 64.0 + 0.25, 1.0);
    x[i] = amp * (4.0 * std::abs(phase - 0.5) - 1.0);
  }
  const auto m = envelope_mean(x);
  CHECK(central_max_abs(m, 0.0) < 0.02 * amp);
}

TEST_CASE("envelope_mean needs a maximum and a minimum", "[emd][envelope]") {
  CHECK_THROWS_AS(envelope_mean(std::vector<double>{0, 1, 2, 3}), TooFewExtrema);
  CHECK_THROWS_AS(envelope_mean(std::vector<double>{0, 1, 0.5}), TooFewExtrema);
}

TEST_CASE("envelope_mean works for every boundary mode", "[emd][envelope]") {
  const auto s = sampled(1024, [](double t) { return std::sin(2 * kPi * 4 * t) + 2.0; });
  for (auto mode : {BoundaryExtension::constant, BoundaryExtension::periodic,
                    BoundaryExtension::reflection}) {
    const auto m = envelope_mean(s, mode);
    CHECK(central_max_abs(m.samples(), 2.0) < 0.05);
  }
}

TEST_CASE("sift_once", "[emd][sift]") {
  const auto tone4 = [](double t) { return std::sin(2 * kPi * 4 * t); };
  const auto s = sampled(1024, [&](double t) { return tone4(t) + 2.0; });
  const auto h = sift_once(s);
  const auto pure = sampled(1024, tone4);
  CHECK(central_correlation(h.samples(), pure.samples()) >= 0.99);

  // Zero-mean symmetric input is (nearly) a fixed point.
  const auto h2 = sift_once(pure);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < pure.size(); ++i) {
    num += (h2[i] - pure[i]) * (h2[i] - pure[i]);
    den += pure[i] * pure[i];
  }
  CHECK(num / den < EMDSettings{}.sd_threshold);

  // Fast tone over a slow trend.
  const auto fast = [](double t) { return std::sin(2 * kPi * 30 * t); };
  const auto trend = sampled(2048, [&](double t) { return fast(t) + 3.0 * t * t; });
  const auto h3 = sift_once(trend);
  CHECK(central_correlation(h3.samples(), sampled(2048, fast).samples()) >= 0.9);
}

TEST_CASE("extract_imf", "[emd][extract]") {
  SECTION("pure tone converges quickly") {
    const auto s = sampled(1024, [](double t) { return std::sin(2 * kPi * 4 * t); });
    const auto x = extract_imf(s);
    CHECK(x.iterations <= 10);
    CHECK(x.stop_reason == StopReason::delta_reached);
    CHECK(central_correlation(x.imf.samples(), s.samples()) >= 0.99);
  }
  SECTION("max_inner = 1 is a single sift") {
    const auto s = sampled(1024, [](double t) { return std::sin(2 * kPi * 4 * t) + 2.0 + t; });
    EMDSettings cfg;
    cfg.max_inner = 1;
    const auto x = extract_imf(s, cfg);
    CHECK(x.iterations == 1);
    CHECK(x.stop_reason == StopReason::max_inner_reached);
    CHECK(x.imf.values() == sift_once(s).values());
  }
  SECTION("two tones: first IMF is the fast one") {
    const auto fast = [](double t) { return std::sin(2 * kPi * 20 * t); };
    const auto s = sampled(4096, [&](double t) { return std::sin(2 * kPi * 2 * t) + fast(t); });
    const auto x = extract_imf(s);
    CHECK(central_correlation(x.imf.samples(), sampled(4096, fast).samples()) >= 0.95);
  }
  SECTION("no extrema on the first pass") {
    CHECK_THROWS_AS(extract_imf(Signal({0, 1, 2, 3, 4})), TooFewExtrema);
  }
}

TEST_CASE("emd of a monotone ramp has no IMFs", "[emd]") {
  const auto s = sampled(300, [](double t) { return 2.0 * t - 1.0; });
  const auto d = emd(s);
  CHECK(d.size() == 0);
  CHECK(d.residual.values() == s.values());
}

TEST_CASE("emd separates two tones", "[emd]") {
  const auto t = two_tone(4096);
  const auto d = emd(Signal(t.sum, 1.0 / 4096.0));
  REQUIRE(d.size() >= 2);
  CHECK(central_correlation(d.imfs[0].samples(), t.fast) >= 0.95);
  CHECK(central_correlation(d.imfs[1].samples(), t.slow) >= 0.95);
  // A third, boundary-driven IMF may follow; the residual itself stays small.
  CHECK(d.size() <= 4);
  CHECK(max_abs(d.residual.samples()) < 0.1);
}

TEST_CASE("emd reconstruction, invariants and determinism", "[emd][property]") {
  std::mt19937_64 rng(99);
  EMDSettings cfg;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 64 + rng() % 1500;
    auto x = gaussian_noise(n, rng);
    // Add some structure so not every case is white noise.
    for (std::size_t i = 0; i < n; ++i) x[i] += 3.0 * std::sin(0.01 * static_cast<double>(i) * (1 + trial % 5));
    const Signal s(x);
    const auto d = emd(s, cfg);

    const auto r = d.reconstruct();
    REQUIRE(max_abs_diff(r, x) <= 1e-10 * max_abs(x));
    REQUIRE(static_cast<int>(d.size()) <= cfg.max_imfs);
    REQUIRE(d.meta.size() == d.size());

    for (std::size_t k = 0; k < d.size(); ++k) {
      if (d.meta[k].stop_reason != StopReason::delta_reached) continue;
      const auto e = extrema(d.imfs[k]);
      const auto diff = static_cast<long>(e.max_indices.size()) - static_cast<long>(e.min_indices.size());
      CHECK(std::abs(diff) <= 1);
    }

    if (static_cast<int>(d.size()) < cfg.max_imfs &&
        static_cast<int>(extrema(d.residual).count()) >= cfg.min_extrema) {
      // Only allowed when the next IMF would be round-off.
      const auto next = extract_imf(d.residual, cfg);
      REQUIRE(max_abs(next.imf.samples()) <= kNegligibleImf * max_abs(x));
    }

    const auto again = emd(s, cfg);
    REQUIRE(again.size() == d.size());
    for (std::size_t k = 0; k < d.size(); ++k) REQUIRE(again.imfs[k].values() == d.imfs[k].values());
    REQUIRE(again.residual.values() == d.residual.values());
  }
}

TEST_CASE("emd honours max_imfs and the settings checks", "[emd]") {
  std::mt19937_64 rng(4);
  const Signal s(gaussian_noise(500, rng));
  EMDSettings cfg;
  cfg.max_imfs = 2;
  CHECK(emd(s, cfg).size() == 2);

  EMDSettings bad;
  bad.sd_threshold = 0.0;
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  bad = {};
  bad.min_extrema = 1;
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
}
