#include <meixner/monte_carlo.hpp>
#include <meixner/errors.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace meixner {
namespace {

// splitmix64 finalizer; draw i is mix(seed + (i+1) * golden), a bijective
// counter scheme with no sequential state.
std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ULL;

// Fritsch-Carlson limited tangents keep the Hermite interpolant monotone.
double limit_tangent(double m, double sec_left, double sec_right) {
    const double cap = 3.0 * std::min(sec_left, sec_right);
    return std::clamp(m, 0.0, cap);
}

double hermite(double t, double h, double y0, double y1, double m0, double m1) {
    const double t2 = t * t;
    const double t3 = t2 * t;
    return (2.0 * t3 - 3.0 * t2 + 1.0) * y0 + (t3 - 2.0 * t2 + t) * h * m0 +
           (-2.0 * t3 + 3.0 * t2) * y1 + (t3 - t2) * h * m1;
}

template <class Body>
void run_chunked(long count, int threads, std::vector<double>& sums,
                 std::vector<double>& sumsqs, long chunk, const Body& body) {
    const long chunks = (count + chunk - 1) / chunk;
    sums.assign(chunks, 0.0);
    sumsqs.assign(chunks, 0.0);
    std::atomic<long> next{0};
    const auto worker = [&] {
        for (;;) {
            const long j = next.fetch_add(1);
            if (j >= chunks) return;
            const long begin = j * chunk;
            const long end = std::min(count, begin + chunk);
            double s = 0.0;
            double s2 = 0.0;
            for (long i = begin; i < end; ++i) {
                const double v = body(i);
                s += v;
                s2 += v * v;
            }
            sums[j] = s;
            sumsqs[j] = s2;
        }
    };
    int nthreads = threads > 0 ? threads
                               : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    nthreads = static_cast<int>(std::min<long>(nthreads, chunks));
    if (nthreads <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

McEstimate reduce(const std::vector<double>& sums, const std::vector<double>& sumsqs,
                  long paths, std::uint64_t seed) {
    double s = 0.0;
    double s2 = 0.0;
    for (double v : sums) s += v;     // fixed chunk order: bit-stable
    for (double v : sumsqs) s2 += v;
    McEstimate est;
    est.paths = paths;
    est.seed = seed;
    est.value = s / paths;
    if (paths > 1) {
        const double var = std::max(0.0, (s2 - s * s / paths) / (paths - 1));
        est.std_error = std::sqrt(var / paths);
    }
    return est;
}

} // namespace

double uniform_draw(std::uint64_t seed, std::uint64_t index) {
    const std::uint64_t z = mix64(seed + (index + 1) * golden);
    return static_cast<double>(z >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

SamplerTable::SamplerTable(const PeriodLaw& law, int resolution) : law_(law) {
    if (resolution < 256) throw DomainError("SamplerTable: resolution must be >= 256");
    const MeixnerParams& p = law.params;
    rate_left_ = (pi + p.beta()) / p.alpha();
    rate_right_ = (pi - p.beta()) / p.alpha();

    // Grid spanning mass 1e-10 per tail (beyond the 1e-9 quantiles), cdf by
    // one cumulative quadrature pass; strictly increasing by positivity.
    const SupportInterval sup = support_interval(p, 1.0, 1e-10);
    const int m = std::max(resolution, 4096);
    x_.resize(m);
    cdf_.resize(m);
    density_.resize(m);
    const double h = (sup.hi - sup.lo) / (m - 1);
    for (int i = 0; i < m; ++i) x_[i] = sup.lo + h * i;

    QuadConfig cfg = distribution_quad_config();
    cfg.abs_tol = 1e-14;
    cfg.rel_tol = 1e-10;
    const auto f = [&](double u) { return pdf(p, 1.0, u); };
    double acc = 0.5 * sup.tail_mass_bound; // half the left-tail bound as starting mass
    cdf_[0] = acc;
    density_[0] = f(x_[0]);
    for (int i = 1; i < m; ++i) {
        QuadResult<double> panel =
            integrate_finite(std::function<double(double)>(f), x_[i - 1], x_[i], cfg);
        acc += panel.value;
        cdf_[i] = acc;
        density_[i] = f(x_[i]);
        if (!(cdf_[i] > cdf_[i - 1]))
            throw ConvergenceFailure("SamplerTable: cdf grid not strictly increasing");
    }

    // Tangents of the inverse x(u): 1/f at the knots, monotonicity-limited.
    inv_slope_.resize(m);
    for (int i = 0; i < m; ++i) {
        const double sec_l = i > 0 ? h / (cdf_[i] - cdf_[i - 1]) : 1.0 / density_[i];
        const double sec_r = i + 1 < m ? h / (cdf_[i + 1] - cdf_[i]) : 1.0 / density_[i];
        inv_slope_[i] = limit_tangent(1.0 / density_[i], sec_l, sec_r);
    }
}

double SamplerTable::invert(double u) const {
    if (!(u > 0.0 && u < 1.0)) throw DomainError("SamplerTable::invert: u must be in (0,1)");
    if (u <= cdf_.front())
        return x_.front() + std::log(u / cdf_.front()) / rate_left_;
    if (u >= cdf_.back())
        return x_.back() + std::log((1.0 - cdf_.back()) / (1.0 - u)) / rate_right_;
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    const std::size_t i = static_cast<std::size_t>(it - cdf_.begin()) - 1;
    const double du = cdf_[i + 1] - cdf_[i];
    const double t = (u - cdf_[i]) / du;
    return hermite(t, du, x_[i], x_[i + 1], inv_slope_[i], inv_slope_[i + 1]);
}

double SamplerTable::grid_cdf(double x) const {
    if (x <= x_.front()) return cdf_.front() * std::exp(rate_left_ * (x - x_.front()));
    if (x >= x_.back())
        return 1.0 - (1.0 - cdf_.back()) * std::exp(-rate_right_ * (x - x_.back()));
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    return hermite(t, h, cdf_[i], cdf_[i + 1], density_[i], density_[i + 1]);
}

SamplerTable build_sampler(const PeriodLaw& law, int resolution) {
    return SamplerTable(law, resolution);
}

std::vector<double> sample_y(const SamplerTable& table, long count, std::uint64_t seed) {
    if (count < 1) throw DomainError("sample_y: count must be >= 1");
    std::vector<double> out(count);
    for (long i = 0; i < count; ++i) out[i] = table.invert(uniform_draw(seed, i));
    return out;
}

McEstimate mc_price(const GeometricMeixnerModel& model, const CliquetContract& contract,
                    long paths, std::uint64_t seed, int threads) {
    if (paths < 1) throw DomainError("mc_price: paths must be >= 1");
    const double disc =
        contract.notional() * std::exp(-model.rate() * contract.maturity());
    const double g = contract.guarantee();

    if (contract.floor_always_binds()) {
        // sum_k Z_k <= 0 almost surely; the payoff is the constant K(1+g).
        McEstimate est;
        est.value = disc * (1.0 + g);
        est.std_error = 0.0;
        est.paths = paths;
        est.seed = seed;
        return est;
    }

    const SamplerTable table(period_law(model, contract.tau()), 4096);
    const int n = contract.resets();
    const double c = contract.local_cap();
    const double shift = g / n;

    std::vector<double> sums, sumsqs;
    run_chunked(paths, threads, sums, sumsqs, 1L << 14, [&](long i) {
        double z_sum = 0.0;
        const std::uint64_t base = static_cast<std::uint64_t>(i) * n;
        for (int k = 0; k < n; ++k) {
            const double y = table.invert(uniform_draw(seed, base + k));
            z_sum += std::min(c, std::expm1(y)) - shift;
        }
        return disc * (1.0 + g + std::max(0.0, z_sum));
    });
    return reduce(sums, sumsqs, paths, seed);
}

McEstimate mc_expected_z1(const GeometricMeixnerModel& model, const CliquetContract& contract,
                          long paths, std::uint64_t seed, int threads) {
    if (paths < 1) throw DomainError("mc_expected_z1: paths must be >= 1");
    const SamplerTable table(period_law(model, contract.tau()), 4096);
    const double c = contract.local_cap();
    const double shift = contract.guarantee() / contract.resets();

    std::vector<double> sums, sumsqs;
    run_chunked(paths, threads, sums, sumsqs, 1L << 15, [&](long i) {
        const double y = table.invert(uniform_draw(seed, i));
        return std::min(c, std::expm1(y)) - shift;
    });
    return reduce(sums, sumsqs, paths, seed);
}

} // namespace meixner
