// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace margin {

/// UTC instant at minute resolution, stored as minutes since 1970-01-01T00:00Z.
/// All engine timestamps live on this clock; finer resolutions are rejected at
/// parse time.
class Timestamp {
public:
    Timestamp() = default;
    explicit constexpr Timestamp(std::int64_t epoch_minutes) : minutes_(epoch_minutes) {}

    static Timestamp from_civil(int year, int month, int day, int hour = 0, int minute = 0);

    /// Accepts "YYYY-MM-DDTHH:MMZ" and "YYYY-MM-DDTHH:MM:00Z" (UTC only).
    static Timestamp parse(std::string_view iso);

    constexpr std::int64_t epoch_minutes() const { return minutes_; }

    /// Canonical form "YYYY-MM-DDTHH:MMZ".
    std::string to_string() const;

    int year() const;
    int month() const;   // 1..12
    int day() const;     // 1..31
    int hour() const;    // 0..23
    int minute() const;  // 0..59

    friend constexpr auto operator<=>(const Timestamp&, const Timestamp&) = default;

    constexpr Timestamp operator+(std::int64_t minutes) const { return Timestamp(minutes_ + minutes); }
    constexpr Timestamp operator-(std::int64_t minutes) const { return Timestamp(minutes_ - minutes); }
    constexpr std::int64_t operator-(const Timestamp& other) const { return minutes_ - other.minutes_; }

private:
    std::int64_t minutes_ = 0;
};

enum class Direction { up, down };

const char* to_string(Direction d);
Direction direction_from_string(std::string_view s);

/// The three instants a margin is defined through: t0 is when the estimate is
/// computed, t is the instant of projection, and the study instant is when the
/// balancing means must be available. Construction enforces t0 <= t <= study.
class TimeTriple {
public:
    TimeTriple(Timestamp t0, Timestamp t, Timestamp study);

    Timestamp t0() const { return t0_; }
    Timestamp t() const { return t_; }
    Timestamp study() const { return study_; }

    /// Anticipation period (study - t), in minutes.
    std::int64_t anticipation_minutes() const { return study_ - t_; }

    /// Full lead from computation to study instant (study - t0), in minutes.
    std::int64_t computation_lead_minutes() const { return study_ - t0_; }

private:
    Timestamp t0_;
    Timestamp t_;
    Timestamp study_;
};

}  // namespace margin
