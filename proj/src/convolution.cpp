// SPDX-License-Identifier: Apache-2.0
#include "margin/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "margin/normal_math.hpp"
#include "margin/validation.hpp"

namespace margin {

namespace {

constexpr double kMassTolerance = 1e-9;
constexpr double kTailSigmas = 6.0;

void normalize(std::vector<double>& masses) {
    double total = 0.0;
    for (double& m : masses) {
        if (m < 0.0) m = 0.0;  // clip rounding dust
        total += m;
    }
    if (total <= 0.0) throw ValidationError("density grid: vanished total mass");
    for (double& m : masses) m /= total;
}

// One-sided normal tail fitted to two quantile points. sigma == 0 marks a
// degenerate tail (both points coincide): no extension.
struct TailFit {
    double mu = 0.0;
    double sigma = 0.0;
};

TailFit fit_tail(double x_inner, double p_inner, double x_outer, double p_outer) {
    if (x_inner == x_outer) return {};
    const double z_inner = normal_quantile(p_inner);
    const double z_outer = normal_quantile(p_outer);
    const double sigma = (x_inner - x_outer) / (z_inner - z_outer);
    return TailFit{x_outer - sigma * z_outer, sigma};
}

// Extended CDF of a quantile grid: linear between grid points, fitted normal
// tails outside them.
class ExtendedCdf {
public:
    explicit ExtendedCdf(const QuantileGrid& g) : xs_(g.values()) {
        ps_.reserve(g.size());
        for (double level : g.levels()) ps_.push_back(level / 100.0);
        if (g.size() >= 2) {
            lower_ = fit_tail(xs_[1], ps_[1], xs_.front(), ps_.front());
            upper_ = fit_tail(xs_[xs_.size() - 2], ps_[ps_.size() - 2], xs_.back(), ps_.back());
        }
        support_lo_ = lower_.sigma > 0.0 ? lower_.mu - kTailSigmas * lower_.sigma : xs_.front();
        support_hi_ = upper_.sigma > 0.0 ? upper_.mu + kTailSigmas * upper_.sigma : xs_.back();
    }

    double support_lo() const { return support_lo_; }
    double support_hi() const { return support_hi_; }

    double operator()(double x) const {
        if (x < xs_.front())
            return lower_.sigma > 0.0 ? normal_cdf((x - lower_.mu) / lower_.sigma) : 0.0;
        if (x >= xs_.back())
            return upper_.sigma > 0.0 ? std::min(1.0, normal_cdf((x - upper_.mu) / upper_.sigma))
                                      : 1.0;
        const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
        const auto hi = static_cast<std::size_t>(it - xs_.begin());
        const std::size_t lo = hi - 1;
        return ps_[lo] + (ps_[hi] - ps_[lo]) * (x - xs_[lo]) / (xs_[hi] - xs_[lo]);
    }

private:
    const std::vector<double>& xs_;
    std::vector<double> ps_;
    TailFit lower_;
    TailFit upper_;
    double support_lo_ = 0.0;
    double support_hi_ = 0.0;
};

DensityGrid point_mass(double x) { return DensityGrid(x, 1.0, {1.0}); }

// Splits each mass of `d` linearly between the two nearest nodes of a lattice
// with the same origin and step `h`. Total mass and mean are preserved.
DensityGrid resample_to_step(const DensityGrid& d, double h) {
    if (d.step() == h || d.is_point_mass()) return d;
    const double ratio = d.step() / h;
    const std::size_t n = d.size();
    const auto out_size =
        static_cast<std::size_t>(std::floor(static_cast<double>(n - 1) * ratio)) + 2;
    std::vector<double> masses(out_size, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const double pos = static_cast<double>(k) * ratio;
        const auto i = static_cast<std::size_t>(pos);
        const double frac = pos - static_cast<double>(i);
        masses[i] += d.masses()[k] * (1.0 - frac);
        if (frac > 0.0) masses[i + 1] += d.masses()[k] * frac;
    }
    normalize(masses);
    return DensityGrid(d.lo(), h, std::move(masses));
}

}  // namespace

void ConvolutionSettings::validate() const {
    if (bins < 2) throw ValidationError("convolution: bins must be at least 2");
    if (!(support_padding >= 0.0)) throw ValidationError("convolution: negative support padding");
}

DensityGrid::DensityGrid(double lo, double step, std::vector<double> masses)
    : lo_(lo), step_(step), masses_(std::move(masses)) {
    if (masses_.empty()) throw ValidationError("density grid: no masses");
    if (!(step_ > 0.0)) throw ValidationError("density grid: step must be positive");
    if (!std::isfinite(lo_)) throw ValidationError("density grid: non-finite origin");
    double total = 0.0;
    for (double m : masses_) {
        if (!(m >= 0.0)) throw ValidationError("density grid: negative mass");
        total += m;
    }
    if (std::fabs(total - 1.0) > kMassTolerance)
        throw ValidationError("density grid: total mass " + std::to_string(total) +
                              " deviates from 1 beyond 1e-9");
}

double DensityGrid::mean() const {
    double acc = 0.0;
    for (std::size_t k = 0; k < masses_.size(); ++k)
        acc += masses_[k] * (lo_ + static_cast<double>(k) * step_);
    return acc;
}

double DensityGrid::variance() const {
    const double m = mean();
    double acc = 0.0;
    for (std::size_t k = 0; k < masses_.size(); ++k) {
        const double d = lo_ + static_cast<double>(k) * step_ - m;
        acc += masses_[k] * d * d;
    }
    return acc;
}

DensityGrid quantile_to_density(const QuantileGrid& g, int n_bins, double support_padding) {
    if (n_bins < 2) throw ValidationError("quantile_to_density: need at least 2 bins");
    if (!(support_padding >= 0.0))
        throw ValidationError("quantile_to_density: negative support padding");
    const ExtendedCdf cdf(g);
    if (cdf.support_hi() == cdf.support_lo()) return point_mass(cdf.support_lo());

    const double pad = support_padding * (cdf.support_hi() - cdf.support_lo());
    const double edge_lo = cdf.support_lo() - pad;
    const double edge_hi = cdf.support_hi() + pad;
    const double step = (edge_hi - edge_lo) / n_bins;
    std::vector<double> masses(static_cast<std::size_t>(n_bins));
    double prev = cdf(edge_lo);
    for (int k = 1; k <= n_bins; ++k) {
        const double next = k == n_bins ? 1.0 : cdf(edge_lo + step * k);
        masses[static_cast<std::size_t>(k - 1)] = next - prev;
        prev = next;
    }
    normalize(masses);
    return DensityGrid(edge_lo + 0.5 * step, step, std::move(masses));
}

DensityGrid convolve(const DensityGrid& a, const DensityGrid& b) {
    if (a.is_point_mass())
        return DensityGrid(b.lo() + a.lo(), b.step(), b.masses());
    if (b.is_point_mass())
        return DensityGrid(a.lo() + b.lo(), a.step(), a.masses());
    const double h = std::max(a.step(), b.step());
    const DensityGrid ra = resample_to_step(a, h);
    const DensityGrid rb = resample_to_step(b, h);
    std::vector<double> out(ra.size() + rb.size() - 1, 0.0);
    for (std::size_t i = 0; i < ra.size(); ++i) {
        const double mi = ra.masses()[i];
        if (mi == 0.0) continue;
        for (std::size_t j = 0; j < rb.size(); ++j) out[i + j] += mi * rb.masses()[j];
    }
    normalize(out);
    return DensityGrid(ra.lo() + rb.lo(), h, std::move(out));
}

QuantileGrid density_to_quantiles(const DensityGrid& d, const std::vector<double>& levels) {
    if (d.is_point_mass()) {
        return QuantileGrid(levels, std::vector<double>(levels.size(), d.lo()));
    }
    // CDF at bin upper edges; mass k occupies [lo + (k-1/2) step, lo + (k+1/2) step).
    std::vector<double> cum(d.size() + 1, 0.0);
    for (std::size_t k = 0; k < d.size(); ++k) cum[k + 1] = cum[k] + d.masses()[k];
    cum.back() = 1.0;
    const double first_edge = d.lo() - 0.5 * d.step();
    std::vector<double> values(levels.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const double p = levels[i] / 100.0;
        while (k + 1 < cum.size() && cum[k + 1] < p) ++k;
        const double mass = cum[k + 1] - cum[k];
        const double frac = mass > 0.0 ? (p - cum[k]) / mass : 0.0;
        values[i] = first_edge + d.step() * (static_cast<double>(k) + frac);
    }
    return QuantileGrid(levels, std::move(values));
}

QuantileGrid global_distribution(const std::vector<QuantileGrid>& drivers,
                                 const std::vector<double>& out_levels,
                                 const ConvolutionSettings& settings) {
    settings.validate();
    if (drivers.empty())
        throw ValidationError("global distribution: at least one driver grid is required");
    DensityGrid acc = quantile_to_density(drivers.front(), settings.bins, settings.support_padding);
    for (std::size_t i = 1; i < drivers.size(); ++i)
        acc = convolve(acc, quantile_to_density(drivers[i], settings.bins,
                                                settings.support_padding));
    return density_to_quantiles(acc, out_levels);
}

}  // namespace margin
