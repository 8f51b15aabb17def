// SPDX-License-Identifier: Apache-2.0
#include "margin/margin_engine.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>

#include "margin/validation.hpp"

namespace margin {

ProbabilisticMargins probabilistic_margins(const QuantileGrid& global) {
    return ProbabilisticMargins{global.quantile(99.0), global.quantile(1.0)};
}

MarginResult final_margins(const TimeTriple& triple, const ProbabilisticMargins& proba,
                           const DeterministicTable& table) {
    const auto dt = static_cast<double>(triple.anticipation_minutes());
    MarginResult r{triple};
    r.up_proba_mw = proba.up_mw;
    r.down_proba_mw = proba.down_mw;
    r.up_det_mw = table.margin_mw(dt, Direction::up);
    r.down_det_mw = table.margin_mw(dt, Direction::down);
    r.up_final_mw = std::max(r.up_det_mw, r.up_proba_mw);
    r.down_final_mw = std::max(r.down_det_mw, -r.down_proba_mw);
    return r;
}

DriverGrids build_driver_grids(const ForecastSnapshot& snapshot, const TimeTriple& triple,
                               const EngineConfig& config) {
    const Timestamp study = triple.study();
    const auto lookup = [&study](const auto& m, const char* driver) -> const auto& {
        const auto it = m.find(study);
        if (it == m.end())
            throw ValidationError(std::string(driver) + ": no forecast for study instant " +
                                  study.to_string());
        return it->second;
    };

    DriverGrids grids;
    if (snapshot.enabled.wind) {
        QuantileGrid g =
            renewable_grid(lookup(snapshot.wind, "wind"), triple, config.wind_gamma, config.levels);
        grids.up.push_back(g);
        grids.down.push_back(std::move(g));
    }
    if (snapshot.enabled.pv) {
        QuantileGrid g =
            renewable_grid(lookup(snapshot.pv, "pv"), triple, config.wind_gamma, config.levels);
        grids.up.push_back(g);
        grids.down.push_back(std::move(g));
    }
    if (snapshot.enabled.consumption) {
        QuantileGrid g =
            config.consumption.grid(ConsumptionForecast{lookup(snapshot.consumption_mw,
                                                               "consumption")},
                                    triple, config.levels);
        grids.up.push_back(g);
        grids.down.push_back(std::move(g));
    }
    if (snapshot.enabled.conventional) {
        grids.up.push_back(conventional_grid(*snapshot.fleet, Direction::up, config.levels,
                                             config.convolution));
        grids.down.push_back(conventional_grid(*snapshot.fleet, Direction::down, config.levels,
                                               config.convolution));
    }
    return grids;
}

namespace {

MarginResult compute_one(const ForecastSnapshot& snapshot, Timestamp t, Timestamp study,
                         const EngineConfig& config) {
    const TimeTriple triple(snapshot.t0, t, study);
    const DriverGrids grids = build_driver_grids(snapshot, triple, config);
    const QuantileGrid global_up = global_distribution(grids.up, config.levels, config.convolution);
    ProbabilisticMargins proba = probabilistic_margins(global_up);
    if (snapshot.enabled.conventional) {
        const QuantileGrid global_down =
            global_distribution(grids.down, config.levels, config.convolution);
        proba.down_mw = probabilistic_margins(global_down).down_mw;
    }
    return final_margins(triple, proba, config.deterministic);
}

}  // namespace

MarginSetResult compute_margin_set(const ForecastSnapshot& snapshot,
                                   const std::vector<std::pair<Timestamp, Timestamp>>& pairs,
                                   const EngineConfig& config) {
    snapshot.validate();
    std::vector<std::optional<MarginResult>> slots(pairs.size());
    std::vector<std::optional<PairError>> failures(pairs.size());

    unsigned want = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                       : std::max(1u, std::thread::hardware_concurrency());
    want = std::min<unsigned>(want, std::max<std::size_t>(pairs.size(), 1));

    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < pairs.size(); i = next.fetch_add(1)) {
            try {
                slots[i] = compute_one(snapshot, pairs[i].first, pairs[i].second, config);
            } catch (const std::exception& e) {
                failures[i] = PairError{i, e.what()};
            }
        }
    };
    if (want <= 1 || pairs.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(want);
        for (unsigned i = 0; i < want; ++i) threads.emplace_back(worker);
        for (auto& th : threads) th.join();
    }

    MarginSetResult out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (slots[i]) out.results.push_back(*slots[i]);
        if (failures[i]) out.errors.push_back(*failures[i]);
    }
    return out;
}

}  // namespace margin
