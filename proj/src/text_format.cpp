// SPDX-License-Identifier: Apache-2.0
#include "margin/text_format.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "margin/validation.hpp"

namespace margin {

std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view token, const std::string& context) {
    double value = 0.0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size())
        throw ValidationError(context, "'" + std::string(token) + "' is not a number");
    if (!std::isfinite(value))
        throw ValidationError(context, "'" + std::string(token) + "' is not finite");
    return value;
}

long long parse_int(std::string_view token, const std::string& context) {
    long long value = 0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size())
        throw ValidationError(context, "'" + std::string(token) + "' is not an integer");
    return value;
}

}  // namespace margin
