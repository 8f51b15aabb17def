// SPDX-License-Identifier: Apache-2.0
#include "margin/consumption_uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "margin/validation.hpp"

namespace margin {

namespace {
constexpr double kMinutesPerDay = 1440.0;
}

HolidayProfile::HolidayProfile(std::vector<HolidayEntry> entries) : entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        Timestamp::from_civil(e.year, e.month, e.day);  // throws on bad dates
        if (e.peak_mw < 0.0) throw ValidationError("holiday profile: negative peak value");
        if (e.ramp_in_days < 0.0 || e.ramp_out_days < 0.0)
            throw ValidationError("holiday profile: negative ramp length");
    }
}

double HolidayProfile::day_value(Timestamp at) const {
    const double m = static_cast<double>(at.epoch_minutes());
    double total = 0.0;
    for (const auto& e : entries_) {
        const double day_start =
            static_cast<double>(Timestamp::from_civil(e.year, e.month, e.day).epoch_minutes());
        const double day_end = day_start + kMinutesPerDay;
        if (m >= day_start && m < day_end) {
            total += e.peak_mw;
        } else if (m < day_start && e.ramp_in_days > 0.0) {
            const double ramp_start = day_start - e.ramp_in_days * kMinutesPerDay;
            if (m > ramp_start) total += e.peak_mw * (m - ramp_start) / (day_start - ramp_start);
        } else if (m >= day_end && e.ramp_out_days > 0.0) {
            const double ramp_end = day_end + e.ramp_out_days * kMinutesPerDay;
            if (m < ramp_end) total += e.peak_mw * (ramp_end - m) / (ramp_end - day_end);
        }
    }
    return total;
}

void ConsumptionForecast::validate() const {
    if (!std::isfinite(value_mw) || value_mw < 0.0)
        throw ValidationError("consumption forecast: value must be a non-negative MW number");
}

double floored_anticipation_minutes(double delta_t_minutes) {
    if (delta_t_minutes < 0.0)
        throw ValidationError("floored_anticipation_minutes: negative anticipation");
    return std::max(30.0, delta_t_minutes);
}

ConsumptionRegression::ConsumptionRegression(std::vector<double> levels,
                                             std::vector<Coefficients> betas,
                                             HolidayProfile holidays)
    : levels_(std::move(levels)), betas_(std::move(betas)), holidays_(std::move(holidays)) {
    if (levels_.size() != betas_.size())
        throw ValidationError("consumption regression: level/coefficient count mismatch");
    if (levels_.empty()) throw ValidationError("consumption regression: no coefficient rows");
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        if (i > 0 && levels_[i] <= levels_[i - 1])
            throw ValidationError("consumption regression: levels not strictly increasing");
        for (double b : betas_[i])
            if (!std::isfinite(b))
                throw ValidationError("consumption regression: non-finite coefficient at level " +
                                      std::to_string(levels_[i]));
    }
}

const ConsumptionRegression::Coefficients& ConsumptionRegression::coefficients_for(
    double level_percent) const {
    const auto it = std::lower_bound(levels_.begin(), levels_.end(), level_percent - 1e-9);
    if (it == levels_.end() || std::fabs(*it - level_percent) > 1e-9)
        throw ValidationError("consumption regression: no coefficients for level " +
                              std::to_string(level_percent));
    return betas_[static_cast<std::size_t>(it - levels_.begin())];
}

double ConsumptionRegression::evaluate(const Coefficients& b, double consumption_mw,
                                       double delta_t_minutes, double day_value) const {
    const double f = floored_anticipation_minutes(delta_t_minutes);
    const bool short_branch = delta_t_minutes <= 180.0;
    const bool short_holiday = delta_t_minutes <= 600.0;
    double bracket = b[0] + b[1] * consumption_mw;
    bracket += short_branch ? b[2] * f : b[3] * f + b[4];
    bracket += (short_holiday ? b[5] * f : b[6]) * day_value;
    return bracket * (delta_t_minutes / f);
}

double ConsumptionRegression::error_quantile(const ConsumptionForecast& fc,
                                             const TimeTriple& triple,
                                             double level_percent) const {
    fc.validate();
    return evaluate(coefficients_for(level_percent), fc.value_mw,
                    static_cast<double>(triple.anticipation_minutes()),
                    holidays_.day_value(triple.study()));
}

QuantileGrid ConsumptionRegression::grid(const ConsumptionForecast& fc, const TimeTriple& triple,
                                         const std::vector<double>& levels) const {
    fc.validate();
    const double dt = static_cast<double>(triple.anticipation_minutes());
    const double day = holidays_.day_value(triple.study());
    std::vector<double> values(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i) {
        values[i] = evaluate(coefficients_for(levels[i]), fc.value_mw, dt, day);
        if (i > 0 && values[i] < values[i - 1])
            throw ValidationError("consumption regression: quantiles cross between levels " +
                                  std::to_string(levels[i - 1]) + " and " +
                                  std::to_string(levels[i]) + " (bad coefficient set)");
    }
    return QuantileGrid(levels, std::move(values));
}

void ConsumptionRegression::validate(const std::vector<double>& grid_levels,
                                     const ConsumptionValidationRange& range) const {
    for (double level : grid_levels) coefficients_for(level);  // throws if absent
    std::vector<double> consumptions(5);
    for (std::size_t i = 0; i < consumptions.size(); ++i)
        consumptions[i] = range.consumption_min_mw +
                          (range.consumption_max_mw - range.consumption_min_mw) *
                              static_cast<double>(i) / (consumptions.size() - 1);
    const std::array<double, 3> days = {0.0, 0.5 * range.day_max_mw, range.day_max_mw};
    for (double vc : consumptions) {
        for (double dt : range.delta_t_minutes) {
            for (double day : days) {
                double prev = 0.0;
                for (std::size_t i = 0; i < grid_levels.size(); ++i) {
                    const double q = evaluate(coefficients_for(grid_levels[i]), vc, dt, day);
                    if (i > 0 && q < prev)
                        throw ValidationError(
                            "consumption regression: quantiles cross between levels " +
                            std::to_string(grid_levels[i - 1]) + " and " +
                            std::to_string(grid_levels[i]) + " at consumption " +
                            std::to_string(vc) + " MW, anticipation " + std::to_string(dt) +
                            " min, day value " + std::to_string(day));
                    prev = q;
                }
            }
        }
    }
}

}  // namespace margin
