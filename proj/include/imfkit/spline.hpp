// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#pragma once

#include <span>
#include <vector>

namespace imfkit {

/// Natural cubic spline (zero second derivative at the outer knots) through
/// strictly increasing abscissae. Two knots degrade to a straight line.
class NaturalCubicSpline {
 public:
  NaturalCubicSpline(std::vector<double> x, std::vector<double> y);

  double operator()(double t) const;

  /// Evaluates at t = 0, 1, ..., n-1. Faster than repeated operator() since
  /// the knot interval is tracked incrementally.
  std::vector<double> sample_grid(std::size_t n) const;

  std::span<const double> knots() const noexcept { return x_; }

 private:
  double eval_in(std::size_t k, double t) const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> m_;  // second derivatives at the knots
};

}  // namespace imfkit
