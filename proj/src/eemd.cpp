// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#include "imfkit/eemd.hpp"

#include <cmath>
#include <exception>
#include <random>
#include <string>

#include "imfkit/kernels.hpp"

namespace imfkit {
namespace {

// Rows 0..K-1 hold IMFs, row K the residual; row-major, n columns.
struct Stack {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Stack(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  double* row(std::size_t r) { return data.data() + r * cols; }
  const double* row(std::size_t r) const { return data.data() + r * cols; }
};

struct MemberStats {
  std::vector<long> iterations;    // per IMF slot
  std::vector<char> hit_max_inner;
};

EMDSettings member_settings(const EEMDSettings& cfg, int num_imfs) {
  EMDSettings e = cfg.emd;
  e.max_imfs = std::min(e.max_imfs, num_imfs);
  return e;
}

// Adds the aligned decomposition of member `k` into `acc`.
void accumulate_member(const Signal& s, const EEMDSettings& cfg, int num_imfs,
                       int k, Stack& acc, MemberStats& stats) {
  const auto d = emd(noise_member(s, cfg, k), member_settings(cfg, num_imfs));
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < d.imfs.size(); ++i) {
    double* r = acc.row(i);
    for (std::size_t j = 0; j < n; ++j) r[j] += d.imfs[i][j];
    stats.iterations[i] += d.meta[i].inner_iterations;
    if (d.meta[i].stop_reason == StopReason::max_inner_reached) stats.hit_max_inner[i] = 1;
  }
  double* r = acc.row(static_cast<std::size_t>(num_imfs));
  for (std::size_t j = 0; j < n; ++j) r[j] += d.residual[j];
}

// Block b covers members [b*kEnsembleBlock, min(ne, (b+1)*kEnsembleBlock)).
Stack block_sum(const Signal& s, const EEMDSettings& cfg, int num_imfs, int b,
                MemberStats& stats) {
  Stack acc(static_cast<std::size_t>(num_imfs) + 1, s.size());
  const int first = b * kEnsembleBlock;
  const int last = std::min(cfg.ne, first + kEnsembleBlock);
  for (int k = first; k < last; ++k) accumulate_member(s, cfg, num_imfs, k, acc, stats);
  return acc;
}

// Pairwise sum of blocks[lo, hi), fixed tree shape.
Stack pairwise(std::vector<Stack>& blocks, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return std::move(blocks[lo]);
  const std::size_t mid = lo + (hi - lo) / 2;
  Stack a = pairwise(blocks, lo, mid);
  const Stack b = pairwise(blocks, mid, hi);
  for (std::size_t i = 0; i < a.data.size(); ++i) a.data[i] += b.data[i];
  return a;
}

MemberStats make_stats(int num_imfs) {
  return {std::vector<long>(static_cast<std::size_t>(num_imfs), 0),
          std::vector<char>(static_cast<std::size_t>(num_imfs), 0)};
}

Decomposition finish(const Signal& s, const EEMDSettings& cfg, int num_imfs,
                     std::vector<Stack>& blocks,
                     const std::vector<MemberStats>& stats) {
  Stack total = pairwise(blocks, 0, blocks.size());
  const double ne = static_cast<double>(cfg.ne);
  for (double& v : total.data) v /= ne;

  const std::size_t n = s.size();
  Decomposition d{{}, s, {}};
  for (int i = 0; i < num_imfs; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const double* r = total.row(ui);
    d.imfs.push_back(s.with_samples(std::vector<double>(r, r + n)));
    long iters = 0;
    bool capped = false;
    for (const auto& st : stats) {
      iters += st.iterations[ui];
      capped = capped || st.hit_max_inner[ui];
    }
    d.meta.push_back({static_cast<int>(std::lround(static_cast<double>(iters) / ne)),
                      std::nullopt,
                      capped ? StopReason::max_inner_reached : StopReason::delta_reached});
  }
  const double* r = total.row(static_cast<std::size_t>(num_imfs));
  d.residual = s.with_samples(std::vector<double>(r, r + n));
  return d;
}

// nstd == 0: every member is the input itself.
Decomposition padded_emd(const Signal& s, const EEMDSettings& cfg, int num_imfs) {
  auto d = emd(s, member_settings(cfg, num_imfs));
  while (static_cast<int>(d.imfs.size()) < num_imfs) {
    d.imfs.push_back(s.with_samples(std::vector<double>(s.size(), 0.0)));
    d.meta.push_back({0, std::nullopt, StopReason::delta_reached});
  }
  return d;
}

int block_count(const EEMDSettings& cfg) {
  return (cfg.ne + kEnsembleBlock - 1) / kEnsembleBlock;
}

void check_input(const Signal& s, const EEMDSettings& cfg) {
  cfg.validate();
  if (cfg.nstd > 0.0 && stddev(s.samples()) == 0.0) {
    throw ZeroVarianceSignal("EEMD with nstd > 0 needs a signal with nonzero variance");
  }
}

}  // namespace

void EEMDSettings::validate() const {
  if (!(nstd >= 0.0) || !std::isfinite(nstd)) throw InvalidArgument("EEMD nstd must be >= 0");
  if (ne < 1) throw InvalidArgument("EEMD ne must be >= 1");
  if (num_imfs && *num_imfs < 1) throw InvalidArgument("EEMD num_imfs must be >= 1");
  emd.validate();
}

int EEMDSettings::resolved_num_imfs(std::size_t n) const {
  if (num_imfs) return *num_imfs;
  const int k = static_cast<int>(std::lround(std::log2(static_cast<double>(n)))) - 1;
  return std::max(1, k);
}

Signal noise_member(const Signal& s, const EEMDSettings& cfg, int k) {
  cfg.validate();
  if (k < 0 || k >= cfg.ne) {
    throw InvalidArgument("ensemble member " + std::to_string(k) + " out of range [0, " +
                          std::to_string(cfg.ne) + ")");
  }
  if (cfg.nstd == 0.0) return s;
  const double sigma = stddev(s.samples());
  if (sigma == 0.0) {
    throw ZeroVarianceSignal("EEMD with nstd > 0 needs a signal with nonzero variance");
  }
  const auto uk = static_cast<std::uint64_t>(k);
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(uk), static_cast<std::uint32_t>(uk >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double amp = cfg.nstd * sigma;
  auto x = s.values();
  for (double& v : x) v += amp * gauss(rng);
  return s.with_samples(std::move(x));
}

Decomposition eemd(const Signal& s, const EEMDSettings& cfg, int threads) {
  check_input(s, cfg);
  const int num_imfs = cfg.resolved_num_imfs(s.size());
  if (cfg.nstd == 0.0) return padded_emd(s, cfg, num_imfs);

  const int nb = block_count(cfg);
  std::vector<Stack> blocks(static_cast<std::size_t>(nb), Stack(0, 0));
  std::vector<MemberStats> stats(static_cast<std::size_t>(nb), make_stats(num_imfs));
  std::exception_ptr failure;
#ifdef IMFKIT_USE_OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(kernels::resolve_threads(threads))
#else
  (void)threads;
#endif
  for (int b = 0; b < nb; ++b) {
    const auto ub = static_cast<std::size_t>(b);
    try {
      blocks[ub] = block_sum(s, cfg, num_imfs, b, stats[ub]);
    } catch (...) {
#ifdef IMFKIT_USE_OPENMP
#pragma omp critical(imfkit_eemd_failure)
#endif
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return finish(s, cfg, num_imfs, blocks, stats);
}

namespace serial {

Decomposition eemd(const Signal& s, const EEMDSettings& cfg) {
  check_input(s, cfg);
  const int num_imfs = cfg.resolved_num_imfs(s.size());
  if (cfg.nstd == 0.0) return padded_emd(s, cfg, num_imfs);

  std::vector<Stack> blocks;
  std::vector<MemberStats> stats;
  for (int b = 0; b < block_count(cfg); ++b) {
    stats.push_back(make_stats(num_imfs));
    blocks.push_back(block_sum(s, cfg, num_imfs, b, stats.back()));
  }
  return finish(s, cfg, num_imfs, blocks, stats);
}

}  // namespace serial
}  // namespace imfkit
