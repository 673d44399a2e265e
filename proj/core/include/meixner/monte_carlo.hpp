#pragma once

#include <meixner/cliquet.hpp>

#include <cstdint>
#include <vector>

namespace meixner {

/// Inverse-cdf sampling table for one period law: a dense strictly
/// monotone (x, cdf) grid with monotone-cubic inverse interpolation in the
/// body and analytic exponential-tail inversion beyond it (decay rates
/// (pi -+ beta)/alpha; the polynomial correction |x|^{2 delta t - 1} is
/// dropped and folded into the documented tolerance).
class SamplerTable {
public:
    SamplerTable(const PeriodLaw& law, int resolution);

    /// Quantile function; strictly increasing in u on (0, 1).
    double invert(double u) const;

    /// Forward cdf through the same grid (Hermite interpolation), cheap
    /// enough for goodness-of-fit statistics over large samples.
    double grid_cdf(double x) const;

    const PeriodLaw& law() const { return law_; }
    const std::vector<double>& grid_x() const { return x_; }
    const std::vector<double>& grid_cdf_values() const { return cdf_; }
    double left_rate() const { return rate_left_; }
    double right_rate() const { return rate_right_; }

private:
    PeriodLaw law_;
    std::vector<double> x_;
    std::vector<double> cdf_;
    std::vector<double> density_;
    std::vector<double> inv_slope_; // monotonicity-limited dx/du at the knots
    double rate_left_;
    double rate_right_;
};

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    long paths = 0;
    std::uint64_t seed = 0;
};

SamplerTable build_sampler(const PeriodLaw& law, int resolution);

/// i.i.d. draws of Y_tau; bit-reproducible for a fixed (seed, count)
/// because draw i is a pure function of seed and i (counter RNG), and a
/// monotone transform of the underlying uniform stream.
std::vector<double> sample_y(const SamplerTable& table, long count, std::uint64_t seed);

/// Discounted Monte Carlo cliquet price with standard error.  Parallelized
/// over fixed-size path chunks combined in chunk order, so the result is
/// bit-identical for any thread count.  threads = 0 picks the hardware
/// concurrency.
McEstimate mc_price(const GeometricMeixnerModel& model, const CliquetContract& contract,
                    long paths, std::uint64_t seed, int threads = 0);

/// Sample mean of Z_1 = min(c, e^{Y_tau} - 1) - g/n.
McEstimate mc_expected_z1(const GeometricMeixnerModel& model, const CliquetContract& contract,
                          long paths, std::uint64_t seed, int threads = 0);

/// The underlying uniform stream (counter RNG): draw i for a given seed.
double uniform_draw(std::uint64_t seed, std::uint64_t index);

} // namespace meixner
