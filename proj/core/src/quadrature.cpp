#include <meixner/quadrature.hpp>
#include <meixner/errors.hpp>

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace meixner {
namespace {

// Nested Fejer-2 pair: 15 interior Chebyshev nodes (n = 16) reused inside
// the 31-node rule (n = 32).  Weights from the classical closed form
//   w_k = (4/n) sin(theta_k) sum_{m=1}^{n/2} sin((2m-1) theta_k) / (2m-1).
struct Fejer2Pair {
    // Nodes of the fine rule on (-1, 1), descending; every second one
    // (odd index) belongs to the coarse rule.
    double node[31];
    double w_fine[31];
    double w_coarse[15];

    Fejer2Pair() {
        constexpr int n = 32;
        for (int k = 1; k < n; ++k) {
            const double theta = k * pi / n;
            node[k - 1] = std::cos(theta);
            double s = 0.0;
            for (int m = 1; m <= n / 2; ++m)
                s += std::sin((2 * m - 1) * theta) / (2 * m - 1);
            w_fine[k - 1] = 4.0 / n * std::sin(theta) * s;
        }
        constexpr int nc = 16;
        for (int k = 1; k < nc; ++k) {
            const double theta = k * pi / nc;
            double s = 0.0;
            for (int m = 1; m <= nc / 2; ++m)
                s += std::sin((2 * m - 1) * theta) / (2 * m - 1);
            w_coarse[k - 1] = 4.0 / nc * std::sin(theta) * s;
        }
    }
};

const Fejer2Pair& rule() {
    static const Fejer2Pair r;
    return r;
}

template <class T>
double norm_of(const T& v) {
    if constexpr (std::is_same_v<T, double>) return std::abs(v);
    else return std::abs(v);
}

template <class T>
struct Interval {
    double a, b;
    T value;
    double error;
};

template <class T>
struct ByError {
    bool operator()(const Interval<T>& x, const Interval<T>& y) const {
        return x.error < y.error;
    }
};

template <class T>
Interval<T> evaluate_interval(const std::function<T(double)>& f, double a, double b,
                              long& evaluations) {
    const Fejer2Pair& r = rule();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    T fine{};
    T coarse{};
    for (int i = 0; i < 31; ++i) {
        const T v = f(mid + half * r.node[i]);
        if constexpr (std::is_same_v<T, double>) {
            if (!std::isfinite(v)) throw NonFiniteIntegrand("integrand not finite at interior node");
        } else {
            if (!is_finite(v)) throw NonFiniteIntegrand("integrand not finite at interior node");
        }
        fine += r.w_fine[i] * v;
        if (i % 2 == 1) coarse += r.w_coarse[i / 2] * v;
    }
    evaluations += 31;
    // The raw |fine - coarse| difference can narrowly under-bound the
    // residual of the fine rule on endpoint-singular integrands.
    Interval<T> out{a, b, half * fine, 1.25 * norm_of<T>(half * (fine - coarse))};
    return out;
}

template <class T>
QuadResult<T> adaptive_finite(const std::function<T(double)>& f, double a, double b,
                              const QuadConfig& cfg) {
    cfg.validate();
    if (!(a < b)) throw DomainError("integrate_finite: requires a < b");

    QuadResult<T> res;
    std::priority_queue<Interval<T>, std::vector<Interval<T>>, ByError<T>> heap;
    heap.push(evaluate_interval<T>(f, a, b, res.evaluations));

    T total = heap.top().value;
    double total_err = heap.top().error;
    int splits = 0;
    while (splits < cfg.max_subdivisions) {
        const double tol = std::max(cfg.abs_tol, cfg.rel_tol * norm_of<T>(total));
        if (total_err <= tol) break;
        Interval<T> worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) { // interval at machine resolution
            heap.push(Interval<T>{worst.a, worst.b, worst.value, 0.0});
            continue;
        }
        Interval<T> left = evaluate_interval<T>(f, worst.a, mid, res.evaluations);
        Interval<T> right = evaluate_interval<T>(f, mid, worst.b, res.evaluations);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++splits;
    }

    // Re-sum from the final partition; the incremental updates drift a little.
    total = T{};
    total_err = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        total_err += heap.top().error;
        heap.pop();
    }
    res.value = total;
    res.error_estimate = total_err;
    res.converged = total_err <= std::max(cfg.abs_tol, cfg.rel_tol * norm_of<T>(total));
    return res;
}

template <class T>
QuadResult<T> adaptive_semi_infinite(const std::function<T(double)>& f, double a,
                                     double decay_hint, const QuadConfig& cfg,
                                     const TailHandling* tail) {
    cfg.validate();
    if (!(decay_hint > 0.0) || !std::isfinite(decay_hint))
        throw DomainError("integrate_semi_infinite: decay_hint must be positive");

    QuadResult<T> res;
    T total{};
    double panel_err_sum = 0.0;
    double prev_panel_norm = -1.0;
    long subdivisions_used = 0;

    double x = a;
    double width = decay_hint;
    constexpr int min_panels = 3;
    constexpr int max_panels = 4096;

    for (int k = 0; k < max_panels; ++k) {
        const double scale = std::max(cfg.abs_tol, cfg.rel_tol * norm_of<T>(total));
        QuadConfig panel_cfg = cfg;
        panel_cfg.abs_tol = scale / (2.0 * (k + 1) * (k + 2));
        panel_cfg.rel_tol = cfg.rel_tol / 8.0;
        panel_cfg.max_subdivisions =
            static_cast<int>(std::max<long>(16, cfg.max_subdivisions - subdivisions_used));

        QuadResult<T> panel = adaptive_finite<T>(f, x, x + width, panel_cfg);
        res.evaluations += panel.evaluations;
        subdivisions_used += panel.evaluations / 31;
        total += panel.value;
        panel_err_sum += panel.error_estimate;
        x += width;
        width = std::min(2.0 * width, 16.0 * decay_hint);

        const double tol = std::max(cfg.abs_tol, cfg.rel_tol * norm_of<T>(total));
        const double panel_norm = norm_of<T>(panel.value);

        if (k + 1 >= min_panels) {
            if (tail) {
                const double resid = tail->residual_bound(x);
                if (panel_err_sum + resid <= tol) {
                    res.value = total + tail->correction(x);
                    res.error_estimate = panel_err_sum + resid;
                    res.converged = true;
                    return res;
                }
            } else {
                double tail_est = cfg.truncation_tail_bound / x;
                if (prev_panel_norm > 0.0 && panel_norm > 0.0) {
                    const double r = panel_norm / prev_panel_norm;
                    if (r < 0.9) tail_est = std::min(tail_est, 4.0 * panel_norm * r / (1.0 - r));
                } else if (panel_norm == 0.0 && prev_panel_norm == 0.0) {
                    tail_est = std::min(tail_est, 0.0);
                }
                if (panel_err_sum + tail_est <= tol) {
                    res.value = total;
                    res.error_estimate = panel_err_sum + tail_est;
                    res.converged = true;
                    return res;
                }
            }
        }
        prev_panel_norm = panel_norm;
        if (subdivisions_used >= cfg.max_subdivisions) break;
    }
    throw ConvergenceFailure("integrate_semi_infinite: tail estimate did not fall below tolerance");
}

} // namespace

void QuadConfig::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_subdivisions < 1 ||
        !(truncation_tail_bound > 0.0))
        throw DomainError("QuadConfig: invalid tolerances or budgets");
}

QuadResult<double> integrate_finite(const std::function<double(double)>& f,
                                    double a, double b, const QuadConfig& cfg) {
    return adaptive_finite<double>(f, a, b, cfg);
}

QuadResult<complex> integrate_finite(const std::function<complex(double)>& f,
                                     double a, double b, const QuadConfig& cfg) {
    return adaptive_finite<complex>(f, a, b, cfg);
}

QuadResult<double> integrate_semi_infinite(const std::function<double(double)>& f,
                                           double a, double decay_hint,
                                           const QuadConfig& cfg, const TailHandling* tail) {
    return adaptive_semi_infinite<double>(f, a, decay_hint, cfg, tail);
}

QuadResult<complex> integrate_semi_infinite(const std::function<complex(double)>& f,
                                            double a, double decay_hint,
                                            const QuadConfig& cfg, const TailHandling* tail) {
    return adaptive_semi_infinite<complex>(f, a, decay_hint, cfg, tail);
}

QuadResult<double> integrate_principal_value(const std::function<double(double)>& f,
                                             double singularity, double a, double b,
                                             const QuadConfig& cfg) {
    cfg.validate();
    if (!(a < singularity && singularity < b))
        throw DomainError("integrate_principal_value: singularity must lie inside (a, b)");

    const double d = std::min(singularity - a, b - singularity);
    const std::function<double(double)> paired = [&](double h) {
        return f(singularity + h) + f(singularity - h);
    };

    QuadResult<double> core = integrate_finite(paired, 0.0, d, cfg);
    QuadResult<double> out = core;

    if (singularity - d > a) {
        QuadResult<double> left = integrate_finite(f, a, singularity - d, cfg);
        out.value += left.value;
        out.error_estimate += left.error_estimate;
        out.evaluations += left.evaluations;
        out.converged = out.converged && left.converged;
    }
    if (singularity + d < b) {
        QuadResult<double> right = integrate_finite(f, singularity + d, b, cfg);
        out.value += right.value;
        out.error_estimate += right.error_estimate;
        out.evaluations += right.evaluations;
        out.converged = out.converged && right.converged;
    }
    return out;
}

} // namespace meixner
