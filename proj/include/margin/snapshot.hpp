// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "margin/consumption_uncertainty.hpp"
#include "margin/conventional_uncertainty.hpp"
#include "margin/renewable_uncertainty.hpp"
#include "margin/time_model.hpp"

namespace margin {

/// Which uncertainty drivers a snapshot carries and the engine convolves.
struct DriverSet {
    bool wind = false;
    bool pv = false;
    bool consumption = false;
    bool conventional = false;

    int count() const {
        return (wind ? 1 : 0) + (pv ? 1 : 0) + (consumption ? 1 : 0) + (conventional ? 1 : 0);
    }
};

/// Everything known at the instant of computation t0: per-study-instant wind,
/// PV, and consumption forecasts plus the conventional fleet model. Enabled
/// time-series drivers must cover the same study instants, all strictly
/// after t0.
struct ForecastSnapshot {
    Timestamp t0;
    DriverSet enabled;
    std::map<Timestamp, RenewableForecast> wind;
    std::map<Timestamp, RenewableForecast> pv;
    std::map<Timestamp, double> consumption_mw;
    std::optional<FleetSnapshot> fleet;

    void validate() const;

    /// Study instants of the snapshot's forecast table, ascending.
    std::vector<Timestamp> study_instants() const;
};

}  // namespace margin
