// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#include "imfkit/spline.hpp"

#include <algorithm>

#include "imfkit/errors.hpp"

namespace imfkit {

NaturalCubicSpline::NaturalCubicSpline(std::vector<double> x,
                                       std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n < 2 || y_.size() != n) {
    throw InvalidArgument("spline needs at least 2 knots with matching values");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (!(x_[i] > x_[i - 1])) {
      throw InvalidArgument("spline knots must be strictly increasing");
    }
  }
  m_.assign(n, 0.0);
  if (n == 2) return;

  // Tridiagonal system for the interior second derivatives (Thomas algorithm).
  const std::size_t k = n - 2;
  std::vector<double> diag(k), upper(k), rhs(k);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h0 = x_[i] - x_[i - 1];
    const double h1 = x_[i + 1] - x_[i];
    diag[i - 1] = 2.0 * (h0 + h1);
    upper[i - 1] = h1;
    rhs[i - 1] = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
  }
  for (std::size_t i = 1; i < k; ++i) {
    const double lower = x_[i + 1] - x_[i];  // h_{i} on the sub-diagonal
    const double w = lower / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  m_[k] = rhs[k - 1] / diag[k - 1];
  for (std::size_t i = k - 1; i >= 1; --i) {
    m_[i] = (rhs[i - 1] - upper[i - 1] * m_[i + 1]) / diag[i - 1];
  }
}

double NaturalCubicSpline::eval_in(std::size_t k, double t) const {
  const double h = x_[k + 1] - x_[k];
  const double a = (x_[k + 1] - t) / h;
  const double b = (t - x_[k]) / h;
  return a * y_[k] + b * y_[k + 1] +
         ((a * a * a - a) * m_[k] + (b * b * b - b) * m_[k + 1]) * (h * h) / 6.0;
}

double NaturalCubicSpline::operator()(double t) const {
  // Outside the knot range the end cubic pieces are continued.
  auto it = std::upper_bound(x_.begin(), x_.end(), t);
  std::size_t k = it == x_.begin() ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
  k = std::min(k, x_.size() - 2);
  return eval_in(k, t);
}

std::vector<double> NaturalCubicSpline::sample_grid(std::size_t n) const {
  std::vector<double> out(n);
  std::size_t k = 0;
  const std::size_t last = x_.size() - 2;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i);
    while (k < last && t >= x_[k + 1]) ++k;
    out[i] = eval_in(k, t);
  }
  return out;
}

}  // namespace imfkit
