// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "margin/convolution.hpp"
#include "margin/quantile_grid.hpp"
#include "margin/time_model.hpp"

namespace margin {

/// Four-parameter log-normal in MW: value = shift + sign * scale * exp(L)
/// with L ~ Normal(mu_log, sigma_log). sign = -1 reflects the distribution
/// for fleets that can err on the surplus side.
struct LogNormalSpec {
    double mu_log = 0.0;
    double sigma_log = 0.0;
    double scale_mw = 1.0;
    double shift_mw = 0.0;
    int sign = +1;

    void validate() const;
};

/// Conventional fleet model: one component for plants that only produce
/// (thermal, nuclear, run-of-river) and one for bidirectional plants
/// (pumped-storage and power-to-gas).
struct FleetSnapshot {
    LogNormalSpec positive_only;
    LogNormalSpec bidirectional;

    void validate() const;
};

/// Quantile grid of one log-normal component. For sign = -1 the level is
/// mirrored internally so the emitted grid stays non-decreasing.
QuantileGrid lognormal_grid(const LogNormalSpec& spec, const std::vector<double>& levels);

/// Conventional-generation uncertainty for one margin direction: upward
/// convolves both components; downward uses the bidirectional component only
/// (production-only plants carry no surplus risk).
QuantileGrid conventional_grid(const FleetSnapshot& fleet, Direction direction,
                               const std::vector<double>& levels,
                               const ConvolutionSettings& settings);

}  // namespace margin
