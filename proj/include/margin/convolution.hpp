// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "margin/quantile_grid.hpp"

namespace margin {

/// Discretization controls for the convolution pipeline.
struct ConvolutionSettings {
    int bins = 4096;
    double support_padding = 0.10;  // fraction of the support width added per side

    void validate() const;
};

/// Probability masses on a uniform lattice: mass k sits at lo + k * step.
/// Masses are non-negative and sum to 1 within 1e-9. A single-mass grid is a
/// point mass (its step carries no information).
class DensityGrid {
public:
    DensityGrid(double lo, double step, std::vector<double> masses);

    double lo() const { return lo_; }
    double step() const { return step_; }
    const std::vector<double>& masses() const { return masses_; }
    std::size_t size() const { return masses_.size(); }
    bool is_point_mass() const { return masses_.size() == 1; }

    double mean() const;
    double variance() const;

private:
    double lo_;
    double step_;
    std::vector<double> masses_;
};

/// Discretizes the piecewise-linear CDF implied by a quantile grid onto a
/// uniform lattice of n_bins bins. Beyond the outermost grid levels each tail
/// is extended as the tail of the normal fitted to the two outermost grid
/// points, truncated at 6 sigma. A zero-width grid collapses to a single-bin
/// point mass.
DensityGrid quantile_to_density(const QuantileGrid& g, int n_bins, double support_padding);

/// Discrete convolution of two mass grids. Steps are unified internally
/// (masses of the finer grid are split linearly onto the coarser lattice,
/// preserving total mass and mean); point masses shift the other operand
/// exactly.
DensityGrid convolve(const DensityGrid& a, const DensityGrid& b);

/// Reads quantiles at the requested levels (percent) off a mass grid, treating
/// each mass as spread uniformly across its bin.
QuantileGrid density_to_quantiles(const DensityGrid& d, const std::vector<double>& levels);

/// Convolves independent driver distributions into the global imbalance
/// distribution and re-extracts it on `out_levels`. Throws on an empty driver
/// list.
QuantileGrid global_distribution(const std::vector<QuantileGrid>& drivers,
                                 const std::vector<double>& out_levels,
                                 const ConvolutionSettings& settings);

}  // namespace margin
