// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#pragma once

#include <cstdint>
#include <optional>

#include "imfkit/core.hpp"
#include "imfkit/emd.hpp"

namespace imfkit {

/// Ensemble EMD parameters.
///
/// `nstd` is the ratio of the added noise standard deviation to that of the
/// signal. Around 0.2 is the usual starting point; signals dominated by high
/// frequencies tolerate less noise and low-frequency dominated ones more.
/// `ne` is the number of noisy copies averaged; about a hundred is normally
/// enough.
struct EEMDSettings {
  double nstd = 0.2;
  int ne = 100;
  std::uint64_t seed = 0;
  /// Fixed number of output IMFs. Defaults to round(log2(n)) - 1.
  std::optional<int> num_imfs;
  EMDSettings emd;

  void validate() const;
  int resolved_num_imfs(std::size_t n) const;
};

/// Members summed sequentially before the pairwise stage of the reduction.
inline constexpr int kEnsembleBlock = 4;

/// Ensemble member k: s + nstd * std(s) * g_k, with g_k a standard Gaussian
/// sequence that depends only on (seed, k, n).
Signal noise_member(const Signal& s, const EEMDSettings& cfg, int k);

/// Ensemble EMD, members decomposed in parallel over `threads` workers
/// (0 = OpenMP default). Output is bit-identical for any thread count.
///
/// Every member decomposition is aligned to exactly num_imfs IMFs: missing
/// ones are zero, surplus ones stay in that member's residual. With nstd = 0
/// all members coincide and a single EMD is returned, padded.
Decomposition eemd(const Signal& s, const EEMDSettings& cfg = {}, int threads = 0);

namespace serial {
/// Reference ensemble loop: members one after another, same reduction.
Decomposition eemd(const Signal& s, const EEMDSettings& cfg = {});
}  // namespace serial

}  // namespace imfkit
