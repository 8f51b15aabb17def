// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

namespace margin {

/// Probability-level lattice in percent. The default spans 0.5% to 99.5% in
/// 0.5% steps (199 levels); bounds and step are configurable.
struct GridSpec {
    double lo_percent = 0.5;
    double hi_percent = 99.5;
    double step_percent = 0.5;

    /// Expands to the explicit level list; validates the spec.
    std::vector<double> levels() const;
};

/// A distribution represented by its quantile function sampled at fixed
/// probability levels (percent). Levels are strictly increasing in (0, 100);
/// values are non-decreasing. A constant value list is a point mass.
class QuantileGrid {
public:
    QuantileGrid(std::vector<double> levels, std::vector<double> values);

    const std::vector<double>& levels() const { return levels_; }
    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return levels_.size(); }
    double min_level() const { return levels_.front(); }
    double max_level() const { return levels_.back(); }

    /// Piecewise-linear interpolation between bracketing levels; exact at grid
    /// levels. Throws std::out_of_range outside [min_level, max_level].
    double quantile(double level_percent) const;

    /// Inverse-CDF draw for a uniform u in (0, 1); u is clamped to the grid's
    /// level range, so extreme draws return the boundary quantiles.
    double sample_inverse_cdf(double u) const;

private:
    std::vector<double> levels_;
    std::vector<double> values_;
};

}  // namespace margin
