// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

namespace margin {

/// Shortest decimal form that parses back to the same double ("1500", "0.25",
/// "78.0305..."). Plain decimal point, no thousands separators.
std::string format_double(double value);

/// Strict double parse of a whole token; throws ValidationError on leftovers,
/// empty input, or non-finite results.
double parse_double(std::string_view token, const std::string& context);

/// Strict non-negative integer parse of a whole token.
long long parse_int(std::string_view token, const std::string& context);

}  // namespace margin
