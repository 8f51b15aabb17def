// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>
#include <string>
#include <vector>

#include "margin/consumption_uncertainty.hpp"
#include "margin/convolution.hpp"
#include "margin/margin_tables.hpp"
#include "margin/quantile_grid.hpp"
#include "margin/renewable_uncertainty.hpp"

namespace margin {

/// Month-to-season assignment used by the reporting statistics. Months not
/// listed as winter are summer.
struct SeasonMap {
    std::set<int> winter_months = {11, 12, 1, 2, 3};

    void validate() const;
    bool is_winter(int month) const { return winter_months.count(month) > 0; }
    const char* season_of(int month) const { return is_winter(month) ? "winter" : "summer"; }
};

/// Full model configuration. Every component invariant (gamma continuity,
/// quantile-crossing screen, anchor ordering) is validated when a config is
/// loaded, so engine code never sees an invalid value.
struct EngineConfig {
    GridSpec grid;
    WindGammaConstants wind_gamma;
    ConsumptionRegression consumption;
    ConsumptionValidationRange consumption_validation;
    DeterministicTable deterministic = DeterministicTable::reference_default();
    ConvolutionSettings convolution;
    SeasonMap seasons;
    int threads = 0;  // 0 = one per hardware thread

    /// Level lattice expanded from `grid`.
    std::vector<double> levels;

    void validate();
};

}  // namespace margin
