// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace margin {

/// Standard normal CDF.
double normal_cdf(double z);

/// Standard normal density.
double normal_pdf(double z);

/// Standard normal quantile, p in (0, 1). Wichura's AS241 rational
/// approximation, accurate to full double precision.
double normal_quantile(double p);

/// Inverse of the Gauss error function, x in (-1, 1). Evaluated through the
/// normal quantile and refined by one Newton step against std::erf; absolute
/// error below 1e-15 for |x| <= 1 - 1e-9.
double inverse_erf(double x);

/// Standard-normal quantile at the probability level given in percent:
/// sqrt(2) * inverse_erf(2*level/100 - 1). Throws std::domain_error outside
/// (0, 100). Odd-symmetric about level 50.
double alpha(double level_percent);

}  // namespace margin
