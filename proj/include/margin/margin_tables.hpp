// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "margin/time_model.hpp"

namespace margin {

/// One row of the deterministic-margin table.
struct DeterministicAnchor {
    double delta_t_minutes = 0.0;
    double up_mw = 0.0;
    double down_mw = 0.0;
};

/// Deterministic required margins covering specific contingencies (largest
/// nuclear unit upward, interconnector and pumped-storage loss downward).
/// Values between anchors are linearly interpolated and floored to integer
/// MW; anchors are returned exactly.
class DeterministicTable {
public:
    explicit DeterministicTable(std::vector<DeterministicAnchor> anchors);

    /// Reference anchors: 1500/500 MW at 15 minutes and 2300/1250 MW at
    /// 120 minutes (up/down).
    static DeterministicTable reference_default();

    double margin_mw(double delta_t_minutes, Direction direction) const;

    double min_delta_t_minutes() const { return anchors_.front().delta_t_minutes; }
    double max_delta_t_minutes() const { return anchors_.back().delta_t_minutes; }
    const std::vector<DeterministicAnchor>& anchors() const { return anchors_; }

private:
    std::vector<DeterministicAnchor> anchors_;
};

}  // namespace margin
