// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "margin/engine_config.hpp"
#include "margin/margin_tables.hpp"
#include "margin/quantile_grid.hpp"
#include "margin/snapshot.hpp"
#include "margin/time_model.hpp"

namespace margin {

/// Probabilistic margins read off a global imbalance distribution: the 99%
/// quantile upward and the 1% quantile downward (signed; typically negative).
struct ProbabilisticMargins {
    double up_mw = 0.0;
    double down_mw = 0.0;
};

ProbabilisticMargins probabilistic_margins(const QuantileGrid& global);

/// Margins for one (t, study) pair. Driver grids are imbalance distributions
/// with positive values meaning missing production; down_proba_mw keeps the
/// signed 1% quantile while down_det_mw and down_final_mw are positive MW
/// requirements, so down_final_mw = max(down_det_mw, -down_proba_mw).
struct MarginResult {
    TimeTriple triple;
    double up_proba_mw = 0.0;
    double down_proba_mw = 0.0;
    double up_det_mw = 0.0;
    double down_det_mw = 0.0;
    double up_final_mw = 0.0;
    double down_final_mw = 0.0;
};

/// Applies the deterministic floor to probabilistic margins.
MarginResult final_margins(const TimeTriple& triple, const ProbabilisticMargins& proba,
                           const DeterministicTable& table);

/// Per-driver quantile grids for one (t, study) pair, split by direction
/// because the conventional model differs between them.
struct DriverGrids {
    std::vector<QuantileGrid> up;
    std::vector<QuantileGrid> down;
};

DriverGrids build_driver_grids(const ForecastSnapshot& snapshot, const TimeTriple& triple,
                               const EngineConfig& config);

struct PairError {
    std::size_t pair_index = 0;
    std::string message;
};

struct MarginSetResult {
    std::vector<MarginResult> results;  // successful pairs, in input order
    std::vector<PairError> errors;      // failed pairs, in input order
};

/// Computes margins for each (t, study) pair: builds the enabled driver
/// grids, convolves them into the global distribution per direction, extracts
/// the probabilistic margins, and applies the deterministic floor. Pairs are
/// evaluated concurrently; a failing pair is reported without aborting the
/// others.
MarginSetResult compute_margin_set(const ForecastSnapshot& snapshot,
                                   const std::vector<std::pair<Timestamp, Timestamp>>& pairs,
                                   const EngineConfig& config);

}  // namespace margin
