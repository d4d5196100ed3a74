// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#include "imfkit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace imfkit::svg {
namespace {

constexpr double kWidth = 900.0;
constexpr double kPanelHeight = 90.0;
constexpr double kLeft = 90.0;
constexpr double kRight = 20.0;
constexpr double kTop = 20.0;
constexpr double kGap = 14.0;
constexpr std::size_t kMaxPoints = 2000;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string header(double w, double h) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num(w) + "\" height=\"" + num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) +
         "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string panel(const Signal& s, const std::string& name, double top) {
  const double plot_w = kWidth - kLeft - kRight;
  const auto x = s.samples();
  const auto [lo_it, hi_it] = std::minmax_element(x.begin(), x.end());
  double lo = *lo_it;
  double hi = *hi_it;
  if (hi == lo) {
    lo -= 0.5;
    hi += 0.5;
  }
  const std::size_t n = x.size();
  const std::size_t stride = std::max<std::size_t>(1, n / kMaxPoints);

  std::string out = "<g>\n<rect x=\"" + num(kLeft) + "\" y=\"" + num(top) + "\" width=\"" +
                    num(plot_w) + "\" height=\"" + num(kPanelHeight) +
                    "\" fill=\"none\" stroke=\"#bbb\"/>\n";
  out += "<text x=\"6\" y=\"" + num(top + kPanelHeight / 2 + 4) +
         "\" font-family=\"sans-serif\" font-size=\"12\">" + name + "</text>\n";
  out += "<text x=\"" + num(kLeft - 4) + "\" y=\"" + num(top + 10) +
         "\" font-family=\"sans-serif\" font-size=\"9\" text-anchor=\"end\">" + label(hi) +
         "</text>\n";
  out += "<text x=\"" + num(kLeft - 4) + "\" y=\"" + num(top + kPanelHeight) +
         "\" font-family=\"sans-serif\" font-size=\"9\" text-anchor=\"end\">" + label(lo) +
         "</text>\n";
  out += "<polyline fill=\"none\" stroke=\"#1f4e99\" stroke-width=\"1\" points=\"";
  for (std::size_t i = 0; i < n; i += stride) {
    const double px = kLeft + plot_w * static_cast<double>(i) / static_cast<double>(n - 1);
    const double py = top + kPanelHeight * (hi - x[i]) / (hi - lo);
    out += num(px) + "," + num(py) + " ";
  }
  out += "\"/>\n</g>\n";
  return out;
}

// Dark blue -> yellow ramp for t in [0, 1].
std::string colour(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const int r = static_cast<int>(std::lround(20 + 235 * t));
  const int g = static_cast<int>(std::lround(30 + 200 * t));
  const int b = static_cast<int>(std::lround(110 - 90 * t));
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

}  // namespace

std::string decomposition_plot(const Signal& input, const Decomposition& d) {
  const std::size_t panels = d.imfs.size() + 2;
  const double height = kTop + static_cast<double>(panels) * (kPanelHeight + kGap) + 20.0;
  std::string out = header(kWidth, height);
  double top = kTop;
  out += panel(input, "signal", top);
  for (std::size_t k = 0; k < d.imfs.size(); ++k) {
    top += kPanelHeight + kGap;
    out += panel(d.imfs[k], "imf" + std::to_string(k + 1), top);
  }
  top += kPanelHeight + kGap;
  out += panel(d.residual, "residual", top);
  out += "</svg>\n";
  return out;
}

std::string spectrum_plot(const TimeFrequencyGrid& g, std::size_t max_columns) {
  const std::size_t nt = g.times.size();
  const std::size_t nb = g.bins();
  const std::size_t cols = std::max<std::size_t>(1, std::min(nt, max_columns));
  std::vector<double> cells(cols * nb, 0.0);
  for (std::size_t t = 0; t < nt; ++t) {
    const std::size_t c = t * cols / std::max<std::size_t>(1, nt);
    for (std::size_t b = 0; b < nb; ++b) cells[c * nb + b] += g.at(t, b);
  }
  const double peak = cells.empty() ? 0.0 : *std::max_element(cells.begin(), cells.end());

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = 400.0;
  const double cw = plot_w / static_cast<double>(cols);
  const double ch = plot_h / static_cast<double>(nb);
  std::string out = header(kWidth, plot_h + 2 * kTop + 30.0);
  out += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(plot_w) +
         "\" height=\"" + num(plot_h) + "\" fill=\"" + colour(0.0) + "\"/>\n";
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t b = 0; b < nb; ++b) {
      const double v = cells[c * nb + b];
      if (v <= 0.0 || peak <= 0.0) continue;
      // Square-root scale keeps weak ridges visible.
      out += "<rect x=\"" + num(kLeft + cw * static_cast<double>(c)) + "\" y=\"" +
             num(kTop + plot_h - ch * static_cast<double>(b + 1)) + "\" width=\"" +
             num(cw + 0.05) + "\" height=\"" + num(ch + 0.05) + "\" fill=\"" +
             colour(std::sqrt(v / peak)) + "\"/>\n";
    }
  }
  const double fmax = g.freq_edges.back();
  out += "<text x=\"" + num(kLeft - 4) + "\" y=\"" + num(kTop + 10) +
         "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"end\">" + label(fmax) +
         "</text>\n";
  out += "<text x=\"" + num(kLeft - 4) + "\" y=\"" + num(kTop + plot_h) +
         "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"end\">0</text>\n";
  out += "<text x=\"6\" y=\"" + num(kTop + plot_h / 2) +
         "\" font-family=\"sans-serif\" font-size=\"12\">frequency</text>\n";
  if (nt > 0) {
    out += "<text x=\"" + num(kLeft) + "\" y=\"" + num(kTop + plot_h + 18) +
           "\" font-family=\"sans-serif\" font-size=\"10\">" + label(g.times.front()) +
           "</text>\n";
    out += "<text x=\"" + num(kLeft + plot_w) + "\" y=\"" + num(kTop + plot_h + 18) +
           "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"end\">" +
           label(g.times.back()) + "</text>\n";
  }
  out += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kTop + plot_h + 18) +
         "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">time</text>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace imfkit::svg
