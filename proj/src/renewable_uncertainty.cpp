// SPDX-License-Identifier: Apache-2.0
#include "margin/renewable_uncertainty.hpp"

#include <cmath>
#include <string>

#include "margin/normal_math.hpp"
#include "margin/validation.hpp"

namespace margin {

const char* to_string(RenewableKind k) { return k == RenewableKind::wind ? "wind" : "pv"; }

void RenewableForecast::validate() const {
    if (!(std::isfinite(expected_mw) && std::isfinite(q10_mw) && std::isfinite(q90_mw)))
        throw ValidationError(std::string(to_string(kind)) + " forecast: non-finite value");
    if (q10_mw > q90_mw)
        throw ValidationError(std::string(to_string(kind)) + " forecast: q10 (" +
                              std::to_string(q10_mw) + " MW) exceeds q90 (" +
                              std::to_string(q90_mw) + " MW)");
    if (kind == RenewableKind::pv && expected_mw < 0.0)
        throw ValidationError("pv forecast: negative expected value");
}

ErrorQuantiles forecast_to_error_quantiles(const RenewableForecast& f) {
    f.validate();
    // error = expected - production: the 90% production quantile bounds the
    // error from below, the 10% one from above.
    return ErrorQuantiles{f.expected_mw - f.q90_mw, f.expected_mw - f.q10_mw};
}

NormalParams error_quantiles_to_normal(double q10_err_mw, double q90_err_mw) {
    if (q10_err_mw > q90_err_mw)
        throw ValidationError("error quantiles inverted: q10 " + std::to_string(q10_err_mw) +
                              " > q90 " + std::to_string(q90_err_mw));
    static const double kDenom = 1.4142135623730951 * (inverse_erf(0.8) - inverse_erf(-0.8));
    return NormalParams{0.5 * (q10_err_mw + q90_err_mw), (q90_err_mw - q10_err_mw) / kDenom};
}

double WindGammaConstants::continuity_residual() const {
    return std::fabs(std::sqrt(300.0 / a_minutes) - (300.0 + b_minutes) / c_minutes);
}

void WindGammaConstants::validate() const {
    if (!(a_minutes > 0.0)) throw ValidationError("wind gamma: a must be positive");
    if (!(c_minutes > 0.0)) throw ValidationError("wind gamma: c must be positive");
    if (!(continuity_tolerance >= 0.0))
        throw ValidationError("wind gamma: continuity tolerance must be non-negative");
    const double residual = continuity_residual();
    if (residual > continuity_tolerance)
        throw ValidationError("wind gamma: branches discontinuous at 300 min (residual " +
                              std::to_string(residual) + " > tolerance " +
                              std::to_string(continuity_tolerance) + ")");
}

double gamma_wind(double delta_t_minutes, const WindGammaConstants& k) {
    if (delta_t_minutes < 0.0) throw ValidationError("gamma_wind: negative anticipation");
    if (delta_t_minutes <= 300.0) return std::sqrt(delta_t_minutes / k.a_minutes);
    return (delta_t_minutes + k.b_minutes) / k.c_minutes;
}

double gamma_pv(int level_percent, double delta_t_hours) {
    if (delta_t_hours < 0.0) throw ValidationError("gamma_pv: negative anticipation");
    if (level_percent == 10) {
        if (delta_t_hours < 2.5) return -423.0 + 45.0 * delta_t_hours;
        if (delta_t_hours < 6.0) return -310.5 - 10.0 * (delta_t_hours - 2.5);
        return -345.5 - 0.5 * (delta_t_hours - 6.0);
    }
    if (level_percent == 90) {
        if (delta_t_hours < 6.0) return 370.0 + 45.0 * delta_t_hours;
        return 640.0 + (delta_t_hours - 6.0);
    }
    throw ValidationError("gamma_pv: unsupported level " + std::to_string(level_percent) +
                          " (expected 10 or 90)");
}

namespace {

// Gamma-scaled sigma for a wind forecast projected from (t0, study) to
// (t, study). Throws when the lead scale is zero (t0 == study).
double wind_scaled_sigma(const NormalParams& params, const TimeTriple& triple,
                         const WindGammaConstants& k) {
    const double lead = gamma_wind(static_cast<double>(triple.computation_lead_minutes()), k);
    if (lead == 0.0)
        throw ValidationError("wind error model: degenerate horizon (study instant equals t0)");
    const double dt = gamma_wind(static_cast<double>(triple.anticipation_minutes()), k);
    return dt * params.sigma_mw / lead;
}

}  // namespace

double wind_error_quantile(const NormalParams& params, const TimeTriple& triple,
                           const WindGammaConstants& k, double level_percent) {
    return params.mu_mw - wind_scaled_sigma(params, triple, k) * alpha(level_percent);
}

NormalParams pv_adjusted_normal(const ErrorQuantiles& err, const TimeTriple& triple) {
    const double dt_hours = static_cast<double>(triple.anticipation_minutes()) / 60.0;
    const double lead_hours = static_cast<double>(triple.computation_lead_minutes()) / 60.0;
    const double lead10 = gamma_pv(10, lead_hours);
    const double lead90 = gamma_pv(90, lead_hours);
    if (lead10 == 0.0 || lead90 == 0.0)
        throw ValidationError("pv error model: zero gamma at the computation lead");
    const double q10 = err.q10_mw * gamma_pv(10, dt_hours) / lead10;
    const double q90 = err.q90_mw * gamma_pv(90, dt_hours) / lead90;
    if (q10 > q90)
        throw ValidationError("pv error model: gamma adjustment inverted the error quantiles");
    return error_quantiles_to_normal(q10, q90);
}

double pv_error_quantile(const RenewableForecast& f, const TimeTriple& triple,
                         double level_percent) {
    const NormalParams adjusted = pv_adjusted_normal(forecast_to_error_quantiles(f), triple);
    return adjusted.mu_mw + adjusted.sigma_mw * alpha(level_percent);
}

QuantileGrid renewable_grid(const RenewableForecast& f, const TimeTriple& triple,
                            const WindGammaConstants& k, const std::vector<double>& levels) {
    std::vector<double> values(levels.size());
    if (f.kind == RenewableKind::wind) {
        const ErrorQuantiles err = forecast_to_error_quantiles(f);
        const NormalParams params = error_quantiles_to_normal(err.q10_mw, err.q90_mw);
        const double scaled = wind_scaled_sigma(params, triple, k);
        // The wind formula is written against -alpha, so the value emitted at
        // level w is the one the formula assigns to 100-w; the distribution is
        // the normal mirrored through mu and the grid stays non-decreasing.
        for (std::size_t i = 0; i < levels.size(); ++i)
            values[i] = params.mu_mw - scaled * alpha(100.0 - levels[i]);
    } else {
        const NormalParams adjusted = pv_adjusted_normal(forecast_to_error_quantiles(f), triple);
        for (std::size_t i = 0; i < levels.size(); ++i)
            values[i] = adjusted.mu_mw + adjusted.sigma_mw * alpha(levels[i]);
    }
    return QuantileGrid(levels, std::move(values));
}

}  // namespace margin
