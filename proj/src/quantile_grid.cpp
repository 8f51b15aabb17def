// SPDX-License-Identifier: Apache-2.0
#include "margin/quantile_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "margin/validation.hpp"

namespace margin {

std::vector<double> GridSpec::levels() const {
    if (!(step_percent > 0.0)) throw ValidationError("grid step must be positive");
    if (!(lo_percent > 0.0 && hi_percent < 100.0 && lo_percent <= hi_percent))
        throw ValidationError("grid bounds must satisfy 0 < lo <= hi < 100");
    const double span = (hi_percent - lo_percent) / step_percent;
    const auto n = static_cast<std::size_t>(std::llround(span)) + 1;
    if (std::fabs(span - std::round(span)) > 1e-9)
        throw ValidationError("grid step does not divide the [lo, hi] span");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = lo_percent + static_cast<double>(i) * step_percent;
    out.back() = hi_percent;
    return out;
}

QuantileGrid::QuantileGrid(std::vector<double> levels, std::vector<double> values)
    : levels_(std::move(levels)), values_(std::move(values)) {
    if (levels_.empty()) throw ValidationError("quantile grid: empty level list");
    if (levels_.size() != values_.size())
        throw ValidationError("quantile grid: " + std::to_string(levels_.size()) + " levels vs " +
                              std::to_string(values_.size()) + " values");
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        if (!std::isfinite(levels_[i]) || levels_[i] <= 0.0 || levels_[i] >= 100.0)
            throw ValidationError("quantile grid: level " + std::to_string(levels_[i]) +
                                  " outside (0, 100)");
        if (!std::isfinite(values_[i]))
            throw ValidationError("quantile grid: non-finite value at level " +
                                  std::to_string(levels_[i]));
        if (i > 0 && levels_[i] <= levels_[i - 1])
            throw ValidationError("quantile grid: levels not strictly increasing at " +
                                  std::to_string(levels_[i]));
        if (i > 0 && values_[i] < values_[i - 1])
            throw ValidationError("quantile grid: values decrease between levels " +
                                  std::to_string(levels_[i - 1]) + " and " +
                                  std::to_string(levels_[i]));
    }
}

double QuantileGrid::quantile(double level_percent) const {
    if (level_percent < levels_.front() || level_percent > levels_.back())
        throw std::out_of_range("quantile level " + std::to_string(level_percent) +
                                " outside grid range [" + std::to_string(levels_.front()) + ", " +
                                std::to_string(levels_.back()) + "]");
    const auto it = std::lower_bound(levels_.begin(), levels_.end(), level_percent);
    const auto hi = static_cast<std::size_t>(it - levels_.begin());
    if (levels_[hi] == level_percent) return values_[hi];
    const std::size_t lo = hi - 1;
    const double w = (level_percent - levels_[lo]) / (levels_[hi] - levels_[lo]);
    return values_[lo] + w * (values_[hi] - values_[lo]);
}

double QuantileGrid::sample_inverse_cdf(double u) const {
    const double level = std::clamp(u * 100.0, levels_.front(), levels_.back());
    return quantile(level);
}

}  // namespace margin
