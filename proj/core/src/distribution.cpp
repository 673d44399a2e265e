#include <meixner/distribution.hpp>
#include <meixner/complex_gamma.hpp>
#include <meixner/errors.hpp>

#include <algorithm>
#include <cmath>

namespace meixner {
namespace {

complex log_cosh(complex w) {
    // cosh overflows once |Re w| > ~710; switch to the exponential form.
    if (std::abs(w.real()) > 20.0) {
        const complex v = w.real() > 0.0 ? w : -w;
        const complex e = std::exp(-2.0 * v);
        return v - 0.6931471805599453094 + std::log(1.0 + e);
    }
    return std::log(std::cosh(w));
}

void require_time(double t, const char* who) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError(std::string(who) + ": requires t > 0");
}

} // namespace

MeixnerParams::MeixnerParams(double alpha, double beta, double delta, double mu)
    : alpha_(alpha), beta_(beta), delta_(delta), mu_(mu) {
    if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(delta) || !std::isfinite(mu))
        throw DomainError("MeixnerParams: non-finite parameter");
    if (!(alpha > 0.0)) throw DomainError("MeixnerParams: alpha must be > 0");
    if (!(beta > -pi && beta < pi)) throw DomainError("MeixnerParams: beta must lie in (-pi, pi)");
    if (!(delta > 0.0)) throw DomainError("MeixnerParams: delta must be > 0");
}

double drift_theta(const MeixnerParams& p) {
    return p.mu() + p.delta() * p.alpha() * std::tan(0.5 * p.beta());
}

LevyTriplet levy_triplet(const MeixnerParams& p) {
    return LevyTriplet{drift_theta(p), 0.0, p};
}

double levy_density(const MeixnerParams& p, double z) {
    if (z == 0.0) throw DomainError("levy_density: z = 0 is excluded");
    if (!std::isfinite(z)) throw DomainError("levy_density: non-finite z");
    // delta e^{beta z/alpha} / (z sinh(pi z/alpha)); z sinh(pi z/alpha) > 0 on both sides.
    const double az = std::abs(z);
    const double log_dens = std::log(p.delta()) + p.beta() * z / p.alpha() - std::log(az)
                            - log_sinh(pi * az / p.alpha());
    return std::exp(log_dens);
}

complex char_exponent(const MeixnerParams& p, complex u) {
    if (!is_finite(u)) throw DomainError("char_exponent: non-finite argument");
    if (std::abs(p.alpha() * u.imag() - p.beta()) >= pi)
        throw BranchError("char_exponent: argument outside the continuation strip");
    const complex i{0.0, 1.0};
    const complex w = 0.5 * (p.alpha() * u - i * p.beta());
    return i * u * p.mu() +
           2.0 * p.delta() * (std::log(std::cos(0.5 * p.beta())) - log_cosh(w));
}

complex char_function(const MeixnerParams& p, complex u, double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("char_function: requires t >= 0");
    return std::exp(t * char_exponent(p, u));
}

double log_pdf(const MeixnerParams& p, double t, double x) {
    require_time(t, "pdf");
    const double dt = p.delta() * t;
    const double y = (x - p.mu() * t) / p.alpha();
    return 2.0 * dt * std::log(2.0 * std::cos(0.5 * p.beta()))
           - std::log(2.0 * pi * p.alpha()) - std::lgamma(2.0 * dt)
           + p.beta() * y + gamma_abs_squared_log(dt, y);
}

double pdf(const MeixnerParams& p, double t, double x) {
    return std::exp(log_pdf(p, t, x));
}

InversionResult pdf_by_inversion_diag(const MeixnerParams& p, double t, double x) {
    require_time(t, "pdf_by_inversion");
    // f(x) = (1/2pi) int_R e^{t psi(u) - iux} du, evaluated as two half-line
    // complex integrals so the conjugate-symmetry residue is observable.
    const double rate = p.delta() * t * p.alpha(); // |e^{t psi(u)}| ~ e^{-rate |u|}
    const double hint = std::min(1.0 / rate, 50.0 / (1.0 + std::abs(x)));

    const auto envelope = [&](double u) {
        return std::exp(t * char_exponent(p, complex(u, 0.0)).real());
    };
    TailHandling tail{
        [](double) { return 0.0; },
        [&](double X) { return 2.0 * envelope(X) / rate; },
    };
    QuadConfig cfg = distribution_quad_config();
    cfg.abs_tol = 1e-11;
    cfg.rel_tol = 1e-12;
    cfg.max_subdivisions = 20000;

    const auto plus = [&](double u) {
        return std::exp(t * char_exponent(p, complex(u, 0.0)) - complex(0.0, u * x));
    };
    const auto minus = [&](double u) {
        return std::exp(t * char_exponent(p, complex(-u, 0.0)) + complex(0.0, u * x));
    };
    QuadResult<complex> hp = integrate_semi_infinite(std::function<complex(double)>(plus),
                                                     0.0, hint, cfg, &tail);
    QuadResult<complex> hm = integrate_semi_infinite(std::function<complex(double)>(minus),
                                                     0.0, hint, cfg, &tail);
    const complex total = (hp.value + hm.value) / (2.0 * pi);
    return InversionResult{total.real(), std::abs(total.imag())};
}

double pdf_by_inversion(const MeixnerParams& p, double t, double x) {
    return pdf_by_inversion_diag(p, t, x).value;
}

SupportInterval support_interval(const MeixnerParams& p, double t, double eps) {
    require_time(t, "support_interval");
    if (!(eps > 0.0) || eps >= 1.0) throw DomainError("support_interval: eps in (0,1) required");
    const double m = p.mu() * t;
    const double dt = p.delta() * t;
    const double sigma = std::sqrt(0.5 * dt) * p.alpha() / std::cos(0.5 * p.beta());

    // One tail: walk outward until the density is deep in its exponential
    // regime and f(X)/rate is below eps; mass(X) <= 2 f(X)/rate once the
    // local decay exceeds rate/2, which X >= 2(2 delta t - 1)/rate ensures.
    const auto cut = [&](double rate, int sign) {
        double off = std::max({8.0 * sigma, 15.0 * p.alpha(),
                               2.0 * std::max(0.0, 2.0 * dt - 1.0) / rate, 1.0 / rate});
        while (true) {
            const double f = log_pdf(p, t, m + sign * off);
            if (f <= std::log(eps * rate / 2.0)) break;
            off *= 1.25;
            if (!std::isfinite(off)) throw ConvergenceFailure("support_interval: no cut found");
        }
        return off;
    };
    const double rate_r = (pi - p.beta()) / p.alpha();
    const double rate_l = (pi + p.beta()) / p.alpha();
    return SupportInterval{m - cut(rate_l, -1), m + cut(rate_r, +1), eps};
}

double cdf(const MeixnerParams& p, double t, double x) {
    require_time(t, "cdf");
    if (!std::isfinite(x)) throw DomainError("cdf: non-finite x");
    const SupportInterval sup = support_interval(p, t, 1e-12);
    if (x <= sup.lo) return 0.0;
    if (x >= sup.hi) return 1.0;

    QuadConfig cfg = distribution_quad_config();
    cfg.abs_tol = 1e-11;
    QuadResult<double> q = integrate_finite(
        std::function<double(double)>([&](double u) { return pdf(p, t, u); }), sup.lo, x, cfg);
    if (!q.converged) throw ConvergenceFailure("cdf: quadrature did not converge");
    return std::clamp(q.value, 0.0, 1.0);
}

Cumulants cumulants(const MeixnerParams& p, double t) {
    require_time(t, "cumulants");
    const double dt = p.delta() * t;
    const double c = std::cos(0.5 * p.beta());
    return Cumulants{
        p.mu() * t + dt * p.alpha() * std::tan(0.5 * p.beta()),
        0.5 * dt * p.alpha() * p.alpha() / (c * c),
        std::sqrt(2.0 / dt) * std::sin(0.5 * p.beta()),
        3.0 + (2.0 - std::cos(p.beta())) / dt,
    };
}

complex char_exponent_levy_khinchin(const MeixnerParams& p, double u) {
    if (!std::isfinite(u)) throw DomainError("char_exponent_levy_khinchin: non-finite u");
    // psi(u) = i u theta + delta int (e^{iuz} - 1 - iuz)/z e^{beta z/alpha}/sinh(pi z/alpha) dz,
    // folded to two half-lines z = +-s, s > 0.  The integrand has a removable
    // singularity at z = 0 (limit -u^2 alpha/(2 pi)); the numerator is built
    // from cancellation-free pieces so no explicit series patch is needed.
    const double a = p.alpha();
    const auto half = [&](int sign) {
        const double rate = (pi - sign * p.beta()) / a;
        const auto g = [=](double s) {
            const double us = sign * u * s;
            const complex num{-2.0 * std::pow(std::sin(0.5 * us), 2), -x_minus_sin(us)};
            const double weight = std::exp(sign * p.beta() * s / a - log_sinh(pi * s / a));
            return num / s * weight;
        };
        TailHandling tail{
            [](double) { return 0.0; },
            [=](double X) { return 2.0 * (std::abs(u) + 2.0 / X) * std::exp(-rate * X) / rate; },
        };
        QuadConfig cfg = distribution_quad_config();
        cfg.abs_tol = 1e-11;
        const double hint = std::min(1.0 / rate, 30.0 / (1.0 + std::abs(u)));
        return integrate_semi_infinite(std::function<complex(double)>(g), 0.0, hint, cfg, &tail);
    };
    const QuadResult<complex> right = half(+1);
    const QuadResult<complex> left = half(-1);
    return complex(0.0, u * drift_theta(p)) + p.delta() * (right.value + left.value);
}

MeixnerParams affine_transform(const MeixnerParams& p, double c, double m) {
    if (!(c > 0.0) || !std::isfinite(c) || !std::isfinite(m))
        throw DomainError("affine_transform: requires c > 0 and finite m");
    return MeixnerParams(c * p.alpha(), p.beta(), p.delta(), c * p.mu() + m);
}

MeixnerParams convolve(const MeixnerParams& p1, const MeixnerParams& p2) {
    if (p1.alpha() != p2.alpha() || p1.beta() != p2.beta())
        throw IncompatibleParams("convolve: alpha and beta must match exactly");
    return MeixnerParams(p1.alpha(), p1.beta(), p1.delta() + p2.delta(), p1.mu() + p2.mu());
}

MeixnerParams fit_by_moments(double mean, double variance, double skewness,
                             double kurtosis, double t) {
    require_time(t, "fit_by_moments");
    if (!std::isfinite(mean) || !std::isfinite(variance) || !std::isfinite(skewness) ||
        !std::isfinite(kurtosis))
        throw InfeasibleMoments("fit_by_moments: non-finite moment");
    if (!(variance > 0.0)) throw InfeasibleMoments("fit_by_moments: variance must be > 0");
    const double gap = kurtosis - 3.0 - skewness * skewness;
    if (!(gap > 0.0))
        throw InfeasibleMoments("fit_by_moments: requires kurtosis > 3 + skewness^2");

    const double dt = 1.0 / gap;
    const double cos_beta = 2.0 - (kurtosis - 3.0) * dt;
    if (!(cos_beta > -1.0))
        throw InfeasibleMoments("fit_by_moments: skewness too large for this excess kurtosis");
    const double beta = (skewness < 0.0 ? -1.0 : 1.0) * std::acos(std::min(1.0, cos_beta));
    const double alpha = std::cos(0.5 * beta) * std::sqrt(2.0 * variance / dt);
    const double mu = (mean - dt * alpha * std::tan(0.5 * beta)) / t;
    return MeixnerParams(alpha, beta, dt / t, mu);
}

} // namespace meixner
