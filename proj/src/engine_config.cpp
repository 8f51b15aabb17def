// SPDX-License-Identifier: Apache-2.0
#include "margin/engine_config.hpp"

#include "margin/validation.hpp"

namespace margin {

void SeasonMap::validate() const {
    for (int m : winter_months)
        if (m < 1 || m > 12)
            throw ValidationError("season map: month " + std::to_string(m) + " out of range");
}

void EngineConfig::validate() {
    levels = grid.levels();
    wind_gamma.validate();
    consumption.validate(levels, consumption_validation);
    convolution.validate();
    seasons.validate();
    if (threads < 0) throw ValidationError("config: threads must be >= 0");
}

}  // namespace margin
