// SPDX-License-Identifier: Apache-2.0
#include "margin/time_model.hpp"

#include <array>
#include <charconv>
#include <cstdio>

#include "margin/validation.hpp"

namespace margin {

namespace {

constexpr std::int64_t kMinutesPerDay = 24 * 60;

// Civil <-> serial day conversions for the proleptic Gregorian calendar
// (Howard Hinnant's chrono algorithms).
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u +
                         static_cast<unsigned>(d) - 1u;
    const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

struct Civil {
    int year;
    unsigned month;
    unsigned day;
};

Civil civil_from_days(std::int64_t z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp < 10 ? mp + 3 : mp - 9;
    return Civil{static_cast<int>(y + (m <= 2)), m, d};
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

int parse_int_field(std::string_view s, std::size_t pos, std::size_t len, const char* field,
                    std::string_view whole) {
    if (pos + len > s.size()) throw ValidationError("timestamp '" + std::string(whole) + "': truncated");
    int value = 0;
    const char* first = s.data() + pos;
    auto [ptr, ec] = std::from_chars(first, first + len, value);
    if (ec != std::errc() || ptr != first + len)
        throw ValidationError("timestamp '" + std::string(whole) + "': bad " + field + " field");
    return value;
}

}  // namespace

Timestamp Timestamp::from_civil(int year, int month, int day, int hour, int minute) {
    if (month < 1 || month > 12) throw ValidationError("month out of range");
    static constexpr std::array<int, 12> kDays = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    const bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
    const int dim = kDays[static_cast<std::size_t>(month - 1)] + (month == 2 && leap ? 1 : 0);
    if (day < 1 || day > dim) throw ValidationError("day out of range");
    if (hour < 0 || hour > 23 || minute < 0 || minute > 59)
        throw ValidationError("time of day out of range");
    return Timestamp(days_from_civil(year, month, day) * kMinutesPerDay + hour * 60 + minute);
}

Timestamp Timestamp::parse(std::string_view iso) {
    // "YYYY-MM-DDTHH:MMZ" (17 chars) or "YYYY-MM-DDTHH:MM:00Z" (20 chars).
    const bool short_form = iso.size() == 17;
    const bool long_form = iso.size() == 20;
    if (!short_form && !long_form)
        throw ValidationError("timestamp '" + std::string(iso) +
                              "': expected YYYY-MM-DDTHH:MMZ (UTC, minute resolution)");
    if (iso[4] != '-' || iso[7] != '-' || iso[10] != 'T' || iso[13] != ':' || iso.back() != 'Z')
        throw ValidationError("timestamp '" + std::string(iso) + "': malformed");
    if (long_form && (iso[16] != ':' || iso[17] != '0' || iso[18] != '0'))
        throw ValidationError("timestamp '" + std::string(iso) + "': seconds must be 00");
    const int year = parse_int_field(iso, 0, 4, "year", iso);
    const int month = parse_int_field(iso, 5, 2, "month", iso);
    const int day = parse_int_field(iso, 8, 2, "day", iso);
    const int hour = parse_int_field(iso, 11, 2, "hour", iso);
    const int minute = parse_int_field(iso, 14, 2, "minute", iso);
    return from_civil(year, month, day, hour, minute);
}

std::string Timestamp::to_string() const {
    const Civil c = civil_from_days(floor_div(minutes_, kMinutesPerDay));
    const int mod = static_cast<int>(floor_mod(minutes_, kMinutesPerDay));
    char buf[24];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02dZ", c.year, c.month, c.day, mod / 60,
                  mod % 60);
    return buf;
}

int Timestamp::year() const { return civil_from_days(floor_div(minutes_, kMinutesPerDay)).year; }
int Timestamp::month() const {
    return static_cast<int>(civil_from_days(floor_div(minutes_, kMinutesPerDay)).month);
}
int Timestamp::day() const {
    return static_cast<int>(civil_from_days(floor_div(minutes_, kMinutesPerDay)).day);
}
int Timestamp::hour() const { return static_cast<int>(floor_mod(minutes_, kMinutesPerDay)) / 60; }
int Timestamp::minute() const { return static_cast<int>(floor_mod(minutes_, kMinutesPerDay)) % 60; }

const char* to_string(Direction d) { return d == Direction::up ? "up" : "down"; }

Direction direction_from_string(std::string_view s) {
    if (s == "up") return Direction::up;
    if (s == "down") return Direction::down;
    throw ValidationError("direction '" + std::string(s) + "': expected 'up' or 'down'");
}

TimeTriple::TimeTriple(Timestamp t0, Timestamp t, Timestamp study) : t0_(t0), t_(t), study_(study) {
    if (t0 > t || t > study)
        throw ValidationError("instants must satisfy t0 <= t <= study (got " + t0.to_string() +
                              ", " + t.to_string() + ", " + study.to_string() + ")");
}

}  // namespace margin
