// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#include "imfkit/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace imfkit::fft {
namespace {

// FFTW planning is not thread-safe, execution is. Plans are created once per
// (size, direction) under a lock and executed on caller-owned buffers with
// the new-array interface.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int n, int sign) {
    std::lock_guard lock(mutex_);
    auto it = plans_.find({n, sign});
    if (it != plans_.end()) return it->second;
    auto* in = fftw_alloc_complex(static_cast<std::size_t>(n));
    auto* out = fftw_alloc_complex(static_cast<std::size_t>(n));
    fftw_plan plan = fftw_plan_dft_1d(n, in, out, sign,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(in);
    fftw_free(out);
    plans_.emplace(std::pair{n, sign}, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

std::vector<cplx> run(std::span<const cplx> x, int sign) {
  std::vector<cplx> in(x.begin(), x.end());
  std::vector<cplx> out(x.size());
  if (x.empty()) return out;
  fftw_plan plan = cache().get(static_cast<int>(x.size()), sign);
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

}  // namespace

std::vector<cplx> forward(std::span<const cplx> x) {
  return run(x, FFTW_FORWARD);
}

std::vector<cplx> forward(std::span<const double> x) {
  std::vector<cplx> c(x.begin(), x.end());
  return run(c, FFTW_FORWARD);
}

std::vector<cplx> inverse(std::span<const cplx> x) {
  auto out = run(x, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(x.size());
  for (auto& v : out) v *= scale;
  return out;
}

}  // namespace imfkit::fft
