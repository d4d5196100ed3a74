// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#pragma once

#include <string>

#include "imfkit/core.hpp"
#include "imfkit/specfreq.hpp"

namespace imfkit::svg {

/// Stacked line panels: the input on top, then each IMF, then the residual.
/// Each panel is scaled to its own range.
std::string decomposition_plot(const Signal& input, const Decomposition& d);

/// Heat map of the time-frequency grid. Time is summed into at most
/// `max_columns` columns.
std::string spectrum_plot(const TimeFrequencyGrid& grid, std::size_t max_columns = 400);

}  // namespace imfkit::svg
