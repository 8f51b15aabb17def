// SPDX-License-Identifier: Apache-2.0
#include "margin/snapshot.hpp"

#include <cmath>

#include "margin/validation.hpp"

namespace margin {

namespace {

template <typename Map>
void check_instants(const Map& m, Timestamp t0, const char* driver) {
    for (const auto& [study, unused] : m) {
        (void)unused;
        if (study <= t0)
            throw ValidationError(std::string(driver) + " forecast at " + study.to_string() +
                                  " is not after t0 " + t0.to_string());
    }
}

template <typename MapA, typename MapB>
void check_same_instants(const MapA& a, const MapB& b, const char* da, const char* db) {
    if (a.size() != b.size())
        throw ValidationError(std::string(da) + " and " + db +
                              " cover different study-instant sets");
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end(); ++ia, ++ib)
        if (ia->first != ib->first)
            throw ValidationError(std::string(da) + " and " + db +
                                  " cover different study instants (" + ia->first.to_string() +
                                  " vs " + ib->first.to_string() + ")");
}

}  // namespace

void ForecastSnapshot::validate() const {
    if (enabled.count() == 0) throw ValidationError("snapshot: no driver enabled");
    if (enabled.wind && wind.empty()) throw ValidationError("snapshot: wind enabled but no data");
    if (!enabled.wind && !wind.empty())
        throw ValidationError("snapshot: wind data present but driver disabled");
    if (enabled.pv && pv.empty()) throw ValidationError("snapshot: pv enabled but no data");
    if (!enabled.pv && !pv.empty())
        throw ValidationError("snapshot: pv data present but driver disabled");
    if (enabled.consumption && consumption_mw.empty())
        throw ValidationError("snapshot: consumption enabled but no data");
    if (!enabled.consumption && !consumption_mw.empty())
        throw ValidationError("snapshot: consumption data present but driver disabled");
    if (enabled.conventional != fleet.has_value())
        throw ValidationError(enabled.conventional
                                  ? "snapshot: conventional enabled but no fleet parameters"
                                  : "snapshot: fleet parameters present but driver disabled");

    check_instants(wind, t0, "wind");
    check_instants(pv, t0, "pv");
    check_instants(consumption_mw, t0, "consumption");
    if (enabled.wind && enabled.pv) check_same_instants(wind, pv, "wind", "pv");
    if (enabled.wind && enabled.consumption)
        check_same_instants(wind, consumption_mw, "wind", "consumption");
    if (enabled.pv && enabled.consumption)
        check_same_instants(pv, consumption_mw, "pv", "consumption");

    for (const auto& [study, f] : wind) {
        (void)study;
        if (f.kind != RenewableKind::wind) throw ValidationError("snapshot: wind row mis-tagged");
        f.validate();
    }
    for (const auto& [study, f] : pv) {
        (void)study;
        if (f.kind != RenewableKind::pv) throw ValidationError("snapshot: pv row mis-tagged");
        f.validate();
    }
    for (const auto& [study, v] : consumption_mw) {
        if (!std::isfinite(v) || v < 0.0)
            throw ValidationError("snapshot: consumption at " + study.to_string() +
                                  " must be a non-negative MW number");
    }
    if (fleet) fleet->validate();
}

std::vector<Timestamp> ForecastSnapshot::study_instants() const {
    const auto collect = [](const auto& m) {
        std::vector<Timestamp> out;
        out.reserve(m.size());
        for (const auto& [study, unused] : m) {
            (void)unused;
            out.push_back(study);
        }
        return out;
    };
    if (enabled.wind) return collect(wind);
    if (enabled.pv) return collect(pv);
    if (enabled.consumption) return collect(consumption_mw);
    return {};
}

}  // namespace margin
