// SPDX-License-Identifier: Apache-2.0
#include "margin/conventional_uncertainty.hpp"

#include <cmath>

#include "margin/normal_math.hpp"
#include "margin/validation.hpp"

namespace margin {

void LogNormalSpec::validate() const {
    if (!(sigma_log >= 0.0)) throw ValidationError("log-normal spec: sigma_log must be >= 0");
    if (!(scale_mw > 0.0)) throw ValidationError("log-normal spec: scale must be positive");
    if (sign != 1 && sign != -1) throw ValidationError("log-normal spec: sign must be +1 or -1");
    if (!(std::isfinite(mu_log) && std::isfinite(scale_mw) && std::isfinite(shift_mw)))
        throw ValidationError("log-normal spec: non-finite parameter");
}

void FleetSnapshot::validate() const {
    positive_only.validate();
    bidirectional.validate();
}

QuantileGrid lognormal_grid(const LogNormalSpec& spec, const std::vector<double>& levels) {
    spec.validate();
    std::vector<double> values(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const double level = spec.sign > 0 ? levels[i] : 100.0 - levels[i];
        values[i] = spec.shift_mw + spec.sign * spec.scale_mw *
                                        std::exp(spec.mu_log + spec.sigma_log * alpha(level));
    }
    return QuantileGrid(levels, std::move(values));
}

QuantileGrid conventional_grid(const FleetSnapshot& fleet, Direction direction,
                               const std::vector<double>& levels,
                               const ConvolutionSettings& settings) {
    fleet.validate();
    if (direction == Direction::down) return lognormal_grid(fleet.bidirectional, levels);
    return global_distribution(
        {lognormal_grid(fleet.positive_only, levels), lognormal_grid(fleet.bidirectional, levels)},
        levels, settings);
}

}  // namespace margin
