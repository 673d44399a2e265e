#include <meixner/measure_change.hpp>
#include <meixner/errors.hpp>

#include <cmath>

namespace meixner {
namespace {

void require_beta(double beta_star) {
    if (!(beta_star > -pi && beta_star < pi))
        throw DomainError("measure change: beta* must lie in (-pi, pi)");
}

// delta e^{beta z/alpha} / sinh(pi z/alpha), i.e. z * levy density, stable
// for large |z| and both signs.
double z_levy_density(double delta, double beta, double alpha, double z) {
    const double s = std::abs(z);
    const double v = delta * std::exp(beta * z / alpha - log_sinh(pi * s / alpha));
    return z >= 0.0 ? v : -v;
}

// (e^{beta* s/alpha} - e^{beta s/alpha}) / sinh(pi s/alpha) for s > 0 with the
// substitution sign = -1 mapping the negative half line to s > 0.
double simple_shift_integrand(const MeixnerParams& q, double beta_star, int sign, double s) {
    const double a = q.alpha();
    const double kappa = (beta_star - q.beta()) / a;
    const double ls = log_sinh(pi * s / a);
    const double ks = sign * kappa * s;
    if (std::abs(ks) <= 1.0)
        return sign * std::exp(sign * q.beta() * s / a - ls) * std::expm1(ks);
    return sign * (std::exp(sign * beta_star * s / a - ls) -
                   std::exp(sign * q.beta() * s / a - ls));
}

// int_R (e^{beta* z/alpha} - e^{beta z/alpha}) / sinh(pi z/alpha) dz as a
// single combined integrand folded onto s > 0; removable singularity at 0
// with limit 2 (beta* - beta) / pi.
QuadResult<double> simple_shift_integral(const MeixnerParams& q, double beta_star) {
    const double a = q.alpha();
    const auto g = [&](double s) {
        return simple_shift_integrand(q, beta_star, +1, s) +
               simple_shift_integrand(q, beta_star, -1, s);
    };
    const double rate = (pi - std::max(q.beta(), beta_star)) / a;
    const double rate_l = (pi + std::min(q.beta(), beta_star)) / a;
    const double rate_min = std::min(rate, rate_l);
    TailHandling tail{
        [](double) { return 0.0; },
        [&, g](double X) { return 4.0 * std::abs(g(X)) / rate_min + 1e-300; },
    };
    QuadConfig cfg = distribution_quad_config();
    cfg.abs_tol = 1e-12;
    cfg.rel_tol = 1e-11;
    return integrate_semi_infinite(std::function<double(double)>(g), 0.0, 1.0 / rate_min,
                                   cfg, &tail);
}

} // namespace

SimpleChangeSpec::SimpleChangeSpec(double bs) : beta_star(bs) {
    if (!std::isfinite(bs)) throw DomainError("SimpleChangeSpec: non-finite beta*");
    require_beta(bs);
}

GeneralChangeSpec::GeneralChangeSpec(double as, double bs, double ds)
    : alpha_star(as), beta_star(bs), delta_star(ds) {
    if (!std::isfinite(as) || !std::isfinite(bs) || !std::isfinite(ds))
        throw DomainError("GeneralChangeSpec: non-finite parameter");
    if (!(as > 0.0)) throw DomainError("GeneralChangeSpec: alpha* must be > 0");
    if (!(ds > 0.0)) throw DomainError("GeneralChangeSpec: delta* must be > 0");
    require_beta(bs);
}

double log_levy_density_ratio(const MeixnerParams& q, const SimpleChangeSpec& spec, double z) {
    if (z == 0.0) throw DomainError("log_levy_density_ratio: z = 0 is excluded");
    return (spec.beta_star - q.beta()) * z / q.alpha();
}

double log_levy_density_ratio(const MeixnerParams& q, const GeneralChangeSpec& spec, double z) {
    if (z == 0.0) throw DomainError("log_levy_density_ratio: z = 0 is excluded");
    const double s = std::abs(z);
    // sinh(pi z/alpha)/sinh(pi z/alpha*) is positive for either sign of z.
    return (spec.beta_star / spec.alpha_star - q.beta() / q.alpha()) * z +
           std::log(spec.delta_star / q.delta()) + log_sinh(pi * s / q.alpha()) -
           log_sinh(pi * s / spec.alpha_star);
}

MeixnerParams change_measure(const MeixnerParams& q, const SimpleChangeSpec& spec) {
    if (spec.beta_star == q.beta()) return q; // h == 0, P = Q
    const QuadResult<double> I = simple_shift_integral(q, spec.beta_star);
    if (!I.converged) throw ConvergenceFailure("change_measure(simple): drift integral");
    const double mu_star =
        q.mu() + q.delta() * (q.alpha() * (std::tan(0.5 * q.beta()) - std::tan(0.5 * spec.beta_star)) +
                              I.value);
    return MeixnerParams(q.alpha(), spec.beta_star, q.delta(), mu_star);
}

double drift_shift(const MeixnerParams& q, const SimpleChangeSpec& spec) {
    if (spec.beta_star == q.beta()) return 0.0;
    const QuadResult<double> I = simple_shift_integral(q, spec.beta_star);
    if (!I.converged) throw ConvergenceFailure("drift_shift: integral did not converge");
    return q.delta() * I.value;
}

MeixnerParams change_measure(const MeixnerParams& q, const GeneralChangeSpec& spec,
                             GeneralChangeDiagnostics* diag) {
    const double da = q.delta() * q.alpha();
    const double da_star = spec.delta_star * spec.alpha_star;
    const bool pv = da_star != da;

    // Gz(z) = delta* e^{beta* z/alpha*}/sinh(pi z/alpha*)
    //         - delta e^{beta z/alpha}/sinh(pi z/alpha)
    //       = (da_star - da)/(pi z) + (delta* beta* - delta beta)/pi + O(z),
    // so the 1/z part survives exactly when da_star != da.
    const auto Gz = [&](double z) {
        return z_levy_density(spec.delta_star, spec.beta_star, spec.alpha_star, z) -
               z_levy_density(q.delta(), q.beta(), q.alpha(), z);
    };

    QuadConfig cfg = distribution_quad_config();
    cfg.abs_tol = 1e-12;
    cfg.rel_tol = 1e-11;

    const double w = std::min({1.0, q.alpha(), spec.alpha_star});
    QuadResult<double> core = integrate_principal_value(std::function<double(double)>(Gz),
                                                        0.0, -w, w, cfg);

    // Outer pieces decay exponentially on both sides.
    const double rate_r = std::min((pi - q.beta()) / q.alpha(),
                                   (pi - spec.beta_star) / spec.alpha_star);
    const double rate_l = std::min((pi + q.beta()) / q.alpha(),
                                   (pi + spec.beta_star) / spec.alpha_star);
    const auto outer = [&](int sign, double rate) {
        const auto f = [&, sign](double s) { return Gz(sign * (w + s)); };
        TailHandling tail{
            [](double) { return 0.0; },
            [&, f](double X) { return 4.0 * std::abs(f(X)) / rate + 1e-300; },
        };
        return integrate_semi_infinite(std::function<double(double)>(f), 0.0, 1.0 / rate,
                                       cfg, &tail);
    };
    QuadResult<double> right = outer(+1, rate_r);
    QuadResult<double> left = outer(-1, rate_l);

    if (!(core.converged && right.converged && left.converged))
        throw ConvergenceFailure("change_measure(general): drift integral");

    if (diag) {
        diag->pv_regularized = pv;
        diag->integral_error = core.error_estimate + right.error_estimate + left.error_estimate;
    }

    const double integral = core.value + right.value + left.value;
    const double mu_bar = q.mu() + q.delta() * q.alpha() * std::tan(0.5 * q.beta()) -
                          spec.delta_star * spec.alpha_star * std::tan(0.5 * spec.beta_star) +
                          integral;
    return MeixnerParams(spec.alpha_star, spec.beta_star, spec.delta_star, mu_bar);
}

double novikov_integrand(const MeixnerParams& q,
                         const std::function<double(double)>& h, double z) {
    return one_minus_exp_plus_xexp(h(z)) * levy_density(q, z);
}

double novikov_integral(const MeixnerParams& q, const std::function<double(double)>& h) {
    QuadConfig cfg = distribution_quad_config();
    cfg.abs_tol = 1e-11;

    const auto paired = [&](double s) {
        return novikov_integrand(q, h, s) + novikov_integrand(q, h, -s);
    };

    const double w = std::min(1.0, q.alpha());
    double total = 0.0;

    // Dyadic shells closing in on zero.  A finite integral has shell sums
    // shrinking geometrically (the paired integrand tends to a constant);
    // a divergent one has them growing like 2^j.
    double prev = -1.0;
    int growth_streak = 0;
    bool shells_done = false;
    double hi = w;
    for (int j = 0; j < 90; ++j) {
        const double lo = 0.5 * hi;
        QuadResult<double> shell = integrate_finite(std::function<double(double)>(paired),
                                                    lo, hi, cfg);
        total += shell.value;
        if (prev >= 0.0 && shell.value > 1.8 * prev && shell.value > 1e3 * cfg.abs_tol) {
            if (++growth_streak >= 4)
                throw DivergenceDetected("novikov_integral: shell sums grow without bound near z = 0");
        } else {
            growth_streak = 0;
        }
        if (shell.value < 0.25 * cfg.abs_tol && j >= 3) {
            shells_done = true;
            break;
        }
        prev = shell.value;
        hi = lo;
    }
    if (!shells_done)
        throw DivergenceDetected("novikov_integral: shell refinement exhausted without convergence");

    // Outer geometric panels on both sides of [-w, w].
    for (int sign : {+1, -1}) {
        double x = w;
        double width = w;
        double prev_panel = -1.0;
        int grow = 0;
        bool done = false;
        for (int k = 0; k < 300; ++k) {
            const auto f = [&, sign](double s) { return novikov_integrand(q, h, sign * s); };
            QuadResult<double> panel = integrate_finite(std::function<double(double)>(f),
                                                        x, x + width, cfg);
            total += panel.value;
            if (prev_panel >= 0.0 && panel.value > 1.2 * prev_panel && panel.value > 1e3 * cfg.abs_tol) {
                if (++grow >= 4)
                    throw DivergenceDetected("novikov_integral: outer panels grow without bound");
            } else {
                grow = 0;
            }
            if (k >= 2 && panel.value < 0.25 * cfg.abs_tol &&
                (prev_panel < 0.0 || panel.value < prev_panel)) {
                done = true;
                break;
            }
            prev_panel = panel.value;
            x += width;
            width *= 2.0;
        }
        if (!done) throw DivergenceDetected("novikov_integral: outer panels did not converge");
    }
    return total;
}

} // namespace meixner
