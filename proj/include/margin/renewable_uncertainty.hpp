// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "margin/quantile_grid.hpp"
#include "margin/time_model.hpp"

namespace margin {

enum class RenewableKind { wind, pv };

const char* to_string(RenewableKind k);

/// Production forecast for one study instant: expected value plus the 10% and
/// 90% quantile forecasts, all in MW. Asymmetric bands around the expected
/// value are legal; only q10 <= q90 is required. PV expected values must be
/// non-negative.
struct RenewableForecast {
    RenewableKind kind = RenewableKind::wind;
    double expected_mw = 0.0;
    double q10_mw = 0.0;
    double q90_mw = 0.0;

    void validate() const;
};

/// Forecast-error quantiles, in MW. q10 <= q90.
struct ErrorQuantiles {
    double q10_mw = 0.0;
    double q90_mw = 0.0;
};

/// Parameters of a normal error distribution, in MW. sigma = 0 is a point mass.
struct NormalParams {
    double mu_mw = 0.0;
    double sigma_mw = 0.0;
};

/// Converts production quantile forecasts to forecast-error quantiles:
/// error = expected - production, so the 10% production quantile yields the
/// 90% error quantile and vice versa.
ErrorQuantiles forecast_to_error_quantiles(const RenewableForecast& f);

/// Fits a normal distribution to the 10%/90% error quantiles:
/// mu = (q10 + q90)/2, sigma = (q90 - q10) / (2 * z90) with z90 the 90%
/// standard normal quantile. Throws on inverted quantiles.
NormalParams error_quantiles_to_normal(double q10_err_mw, double q90_err_mw);

/// Horizon-scaling constants for the wind error model. The two branches of
/// the scaling function must join continuously at 300 minutes; the residual
/// is checked against `continuity_tolerance` by validate().
struct WindGammaConstants {
    double a_minutes = 15.0;
    double b_minutes = 0.0;
    double c_minutes = 67.08203932499369;  // 300 / sqrt(300 / a), continuous at 300
    double continuity_tolerance = 1e-6;

    double continuity_residual() const;
    void validate() const;
};

/// Wind horizon scale: sqrt(dt/a) up to 300 minutes, (dt + b)/c beyond.
double gamma_wind(double delta_t_minutes, const WindGammaConstants& k);

/// PV horizon scale for error-quantile level 10 or 90; the anticipation is in
/// hours. Piecewise linear with breakpoints at 2.5 h and 6 h (level 10) and
/// 6 h (level 90); continuous at every breakpoint.
double gamma_pv(int level_percent, double delta_t_hours);

/// Wind error quantile at one level, exactly as the error model defines it:
/// mu - [gamma(dt) * sigma / gamma(lead)] * alpha(level). Decreasing in the
/// level for sigma > 0; renewable_grid() re-labels levels so the emitted grid
/// is a valid (non-decreasing) quantile function of the same distribution.
double wind_error_quantile(const NormalParams& params, const TimeTriple& triple,
                           const WindGammaConstants& k, double level_percent);

/// Normal parameters of the PV error after scaling the 10/90 error quantiles
/// by their respective gamma ratios gamma_i(dt)/gamma_i(lead).
NormalParams pv_adjusted_normal(const ErrorQuantiles& err, const TimeTriple& triple);

/// PV error quantile at one level: adjusted mu + adjusted sigma * alpha(level).
double pv_error_quantile(const RenewableForecast& f, const TimeTriple& triple,
                         double level_percent);

/// Full error quantile grid for a wind or PV forecast at the given levels.
QuantileGrid renewable_grid(const RenewableForecast& f, const TimeTriple& triple,
                            const WindGammaConstants& k, const std::vector<double>& levels);

}  // namespace margin
