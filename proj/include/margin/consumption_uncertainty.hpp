// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "margin/quantile_grid.hpp"
#include "margin/time_model.hpp"

namespace margin {

/// One public holiday: the day-value ramps linearly from 0 over `ramp_in_days`
/// before the date, holds `peak_mw` for the whole calendar day, and ramps back
/// to 0 over `ramp_out_days` after it.
struct HolidayEntry {
    int year = 0;
    int month = 0;
    int day = 0;
    double peak_mw = 0.0;
    double ramp_in_days = 0.0;
    double ramp_out_days = 0.0;
};

/// Piecewise-linear day(T) built from holiday entries; 0 away from holidays.
/// Overlapping ramps add.
class HolidayProfile {
public:
    HolidayProfile() = default;
    explicit HolidayProfile(std::vector<HolidayEntry> entries);

    double day_value(Timestamp at) const;
    const std::vector<HolidayEntry>& entries() const { return entries_; }

private:
    std::vector<HolidayEntry> entries_;
};

/// Consumption forecast for one study instant, MW. Non-negative.
struct ConsumptionForecast {
    double value_mw = 0.0;

    void validate() const;
};

/// max(30, anticipation) in minutes: the short-horizon floor of the
/// consumption error regression.
double floored_anticipation_minutes(double delta_t_minutes);

/// Lattice of (consumption MW, anticipation minutes, day value MW) points on
/// which coefficient sets are screened for quantile crossing at load time.
struct ConsumptionValidationRange {
    double consumption_min_mw = 30000.0;
    double consumption_max_mw = 100000.0;
    double day_max_mw = 3000.0;
    std::vector<double> delta_t_minutes = {0, 15, 30, 60, 120, 180, 181, 240, 360, 600, 601, 720};
};

/// Fixed-form quantile regression of the consumption forecast error. For each
/// probability level, seven coefficients weigh: a constant, the consumption
/// forecast, a floored-anticipation term below 180 minutes, an affine
/// anticipation term above 180 minutes, and two holiday terms split at 600
/// minutes. The bracket is scaled by anticipation/floored-anticipation, so
/// the error vanishes as the anticipation goes to 0.
class ConsumptionRegression {
public:
    using Coefficients = std::array<double, 7>;

    ConsumptionRegression() = default;
    ConsumptionRegression(std::vector<double> levels, std::vector<Coefficients> betas,
                          HolidayProfile holidays);

    /// Verifies a coefficient row exists for every grid level and that the
    /// implied quantiles never cross on the validation lattice; throws a
    /// ValidationError naming the offending levels otherwise.
    void validate(const std::vector<double>& grid_levels,
                  const ConsumptionValidationRange& range) const;

    double error_quantile(const ConsumptionForecast& fc, const TimeTriple& triple,
                          double level_percent) const;

    /// Error grid across `levels`; throws (naming the levels) if the
    /// configured coefficients produce a non-monotone quantile function.
    QuantileGrid grid(const ConsumptionForecast& fc, const TimeTriple& triple,
                      const std::vector<double>& levels) const;

    const std::vector<double>& levels() const { return levels_; }
    const std::vector<Coefficients>& coefficients() const { return betas_; }
    const HolidayProfile& holidays() const { return holidays_; }

private:
    const Coefficients& coefficients_for(double level_percent) const;
    double evaluate(const Coefficients& b, double consumption_mw, double delta_t_minutes,
                    double day_value) const;

    std::vector<double> levels_;
    std::vector<Coefficients> betas_;
    HolidayProfile holidays_;
};

}  // namespace margin
