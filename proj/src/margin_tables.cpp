// SPDX-License-Identifier: Apache-2.0
#include "margin/margin_tables.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "margin/validation.hpp"

namespace margin {

DeterministicTable::DeterministicTable(std::vector<DeterministicAnchor> anchors)
    : anchors_(std::move(anchors)) {
    if (anchors_.size() < 2) throw ValidationError("deterministic table: need at least 2 anchors");
    for (std::size_t i = 0; i < anchors_.size(); ++i) {
        const auto& a = anchors_[i];
        if (!(std::isfinite(a.delta_t_minutes) && std::isfinite(a.up_mw) && std::isfinite(a.down_mw)))
            throw ValidationError("deterministic table: non-finite anchor");
        if (a.delta_t_minutes < 0.0)
            throw ValidationError("deterministic table: negative anticipation anchor");
        if (i > 0) {
            const auto& prev = anchors_[i - 1];
            if (a.delta_t_minutes <= prev.delta_t_minutes)
                throw ValidationError("deterministic table: anchors not sorted by anticipation");
            if (a.up_mw < prev.up_mw || a.down_mw < prev.down_mw)
                throw ValidationError(
                    "deterministic table: margins must be non-decreasing in the anticipation");
        }
    }
}

DeterministicTable DeterministicTable::reference_default() {
    return DeterministicTable({{15.0, 1500.0, 500.0}, {120.0, 2300.0, 1250.0}});
}

double DeterministicTable::margin_mw(double delta_t_minutes, Direction direction) const {
    if (delta_t_minutes < min_delta_t_minutes() || delta_t_minutes > max_delta_t_minutes())
        throw std::out_of_range("deterministic table: anticipation " +
                                std::to_string(delta_t_minutes) + " min outside anchors [" +
                                std::to_string(min_delta_t_minutes()) + ", " +
                                std::to_string(max_delta_t_minutes()) + "]");
    const auto pick = [direction](const DeterministicAnchor& a) {
        return direction == Direction::up ? a.up_mw : a.down_mw;
    };
    for (std::size_t i = 1; i < anchors_.size(); ++i) {
        const auto& lo = anchors_[i - 1];
        const auto& hi = anchors_[i];
        if (delta_t_minutes == lo.delta_t_minutes) return pick(lo);
        if (delta_t_minutes == hi.delta_t_minutes) return pick(hi);
        if (delta_t_minutes < hi.delta_t_minutes) {
            const double w =
                (delta_t_minutes - lo.delta_t_minutes) / (hi.delta_t_minutes - lo.delta_t_minutes);
            return std::floor(pick(lo) + w * (pick(hi) - pick(lo)));
        }
    }
    return pick(anchors_.back());  // unreachable given the range check
}

}  // namespace margin
