#include <meixner/cliquet.hpp>
#include <meixner/errors.hpp>

#include <bit>
#include <cmath>
#include <unordered_map>

namespace meixner {
namespace {

complex pow_int(complex z, int n) {
    complex out{1.0, 0.0};
    while (n > 0) {
        if (n & 1) out *= z;
        z *= z;
        n >>= 1;
    }
    return out;
}

// Everything the pricing integrals need about the law of Y_tau, built once.
// The density is memoized on the raw bit pattern of u: the adaptive rules
// revisit the same nodes across many transform arguments.
struct PeriodContext {
    MeixnerParams params;
    double u_lo;       // left support cut, mass below is < left_mass
    double left_mass;
    double cap_log;    // L = ln(1+c)
    double atom;       // p = Q(Y_tau >= L)
    double log_norm;   // constant part of the log density
    mutable std::unordered_map<std::uint64_t, double> density_cache;

    explicit PeriodContext(const PeriodLaw& law, const CliquetContract& contract)
        : params(law.params),
          u_lo(0.0),
          left_mass(1e-13),
          cap_log(std::log1p(contract.local_cap())),
          atom(0.0),
          log_norm(0.0) {
        u_lo = support_interval(params, 1.0, left_mass).lo;
        atom = 1.0 - cdf(params, 1.0, cap_log);
        const double dt = params.delta();
        log_norm = 2.0 * dt * std::log(2.0 * std::cos(0.5 * params.beta())) -
                   std::log(2.0 * pi * params.alpha()) - std::lgamma(2.0 * dt);
    }

    double f(double u) const {
        const std::uint64_t key = std::bit_cast<std::uint64_t>(u);
        auto it = density_cache.find(key);
        if (it != density_cache.end()) return it->second;
        const double v = pdf(params, 1.0, u);
        density_cache.emplace(key, v);
        return v;
    }

    bool empty_below_cap() const { return u_lo >= cap_log; }
};

QuadConfig inner_config(const QuadConfig& outer) {
    QuadConfig cfg = outer;
    cfg.abs_tol = std::min(1e-10, 0.01 * outer.abs_tol);
    cfg.rel_tol = std::min(1e-9, outer.rel_tol);
    cfg.max_subdivisions = 4000;
    return cfg;
}

// J(x) = int_{-inf}^{L} [e^{ix(e^u - 1 - c)} - 1] f(u) du. |J| <= 1.
complex inner_transform(const PeriodContext& ctx, double c, double x, const QuadConfig& cfg,
                        double* err = nullptr) {
    if (ctx.empty_below_cap()) {
        if (err) *err = 2.0 * ctx.left_mass;
        return {0.0, 0.0};
    }
    const auto g = [&](double u) {
        return cis_minus_one(x * (std::expm1(u) - c)) * ctx.f(u);
    };
    QuadResult<complex> q = integrate_finite(std::function<complex(double)>(g),
                                             ctx.u_lo, ctx.cap_log, cfg);
    if (!q.converged)
        throw ConvergenceFailure("cliquet: inner characteristic transform did not converge");
    if (err) *err = q.error_estimate + 2.0 * ctx.left_mass;
    return q.value;
}

PeriodContext make_context(const GeometricMeixnerModel& model, const CliquetContract& contract) {
    return PeriodContext(period_law(model, contract.tau()), contract);
}

// E[(min(c, e^Y - 1) - g/n)^k] by quadrature below the cap plus the atom.
double z1_moment(const PeriodContext& ctx, const CliquetContract& contract, int k,
                 const QuadConfig& cfg, double* err) {
    const double shift = contract.guarantee() / contract.resets();
    const double capped = contract.local_cap() - shift;
    double body = 0.0;
    double body_err = std::pow(1.0 + std::abs(shift) + contract.local_cap(), k) * ctx.left_mass;
    if (!ctx.empty_below_cap()) {
        const auto g = [&](double u) {
            return std::pow(std::expm1(u) - shift, k) * ctx.f(u);
        };
        QuadConfig c2 = cfg;
        c2.abs_tol = 1e-12;
        QuadResult<double> q = integrate_finite(std::function<double(double)>(g),
                                                ctx.u_lo, ctx.cap_log, c2);
        if (!q.converged) throw ConvergenceFailure("cliquet: Z1 moment quadrature");
        body = q.value;
        body_err += q.error_estimate;
    }
    if (err) *err = body_err;
    return body + std::pow(capped, k) * ctx.atom;
}

struct OscillatoryTail {
    double rho;
    double atom_pow;   // p^n
    double aux_small;  // residual floor from the truncated inner transform
    std::function<complex(double)> B;

    // int_X^inf cos(rho x)/x^2 dx, usable once rho X is in asymptotic range.
    double cosine_tail(double X) const {
        return std::cos(rho * X) / X - rho * si_upper_tail(rho * X);
    }
    double correction(double X) const {
        double corr = 1.0 / X;
        if (atom_pow > 1e-14 && rho * X >= 16.0) corr -= atom_pow * cosine_tail(X);
        return corr;
    }
    double residual(double X) const {
        const complex BX = B(X);
        double r = std::abs(BX - atom_pow) / X + aux_small / X;
        r += atom_pow * (rho * X >= 16.0 ? 1e-9 : 2.0 / X);
        return r;
    }
};

} // namespace

CliquetContract::CliquetContract(double notional_k, double guarantee_g, double local_cap_c,
                                 int resets_n, double maturity_t)
    : notional_k_(notional_k), guarantee_g_(guarantee_g), local_cap_c_(local_cap_c),
      resets_n_(resets_n), maturity_t_(maturity_t) {
    if (!(notional_k > 0.0) || !std::isfinite(notional_k))
        throw DomainError("CliquetContract: notional must be > 0");
    if (!std::isfinite(guarantee_g)) throw DomainError("CliquetContract: non-finite guarantee");
    if (!(local_cap_c >= 0.0) || !std::isfinite(local_cap_c))
        throw DomainError("CliquetContract: local cap must be >= 0");
    if (resets_n < 1) throw DomainError("CliquetContract: needs at least one reset period");
    if (!(maturity_t > 0.0) || !std::isfinite(maturity_t))
        throw DomainError("CliquetContract: maturity must be > 0");
}

const char* to_string(PricingMethod m) {
    switch (m) {
        case PricingMethod::distribution: return "distribution";
        case PricingMethod::fourier: return "fourier";
        case PricingMethod::monte_carlo: return "monte_carlo";
    }
    return "unknown";
}

complex cf_z1(const GeometricMeixnerModel& model, const CliquetContract& contract, double x) {
    if (!std::isfinite(x)) throw DomainError("cf_z1: non-finite argument");
    const PeriodContext ctx = make_context(model, contract);
    const QuadConfig cfg = inner_config(pricing_quad_config());
    const complex J = inner_transform(ctx, contract.local_cap(), x, cfg);
    const double phase = x * (contract.local_cap() - contract.guarantee() / contract.resets());
    return std::polar(1.0, phase) * (1.0 + J);
}

complex cf_z1_distribution_form(const GeometricMeixnerModel& model,
                                const CliquetContract& contract, double x) {
    if (!std::isfinite(x)) throw DomainError("cf_z1_distribution_form: non-finite argument");
    const PeriodContext ctx = make_context(model, contract);
    const QuadConfig cfg = inner_config(pricing_quad_config());
    const double c = contract.local_cap();

    complex body{0.0, 0.0};
    if (!ctx.empty_below_cap()) {
        const auto g = [&](double u) {
            return std::polar(1.0, x * std::exp(u)) * ctx.f(u);
        };
        const double split = std::clamp(0.0, ctx.u_lo, ctx.cap_log);
        QuadResult<complex> low = integrate_finite(std::function<complex(double)>(g),
                                                   ctx.u_lo, split == ctx.u_lo ? ctx.cap_log : split,
                                                   cfg);
        body = low.value;
        if (split > ctx.u_lo && ctx.cap_log > split) {
            QuadResult<complex> high = integrate_finite(std::function<complex(double)>(g),
                                                        split, ctx.cap_log, cfg);
            body += high.value;
        }
    }
    const complex atom = std::polar(1.0, x * (1.0 + c)) * ctx.atom;
    return std::polar(1.0, -x * (1.0 + contract.guarantee() / contract.resets())) * (atom + body);
}

complex cf_z_sum(const GeometricMeixnerModel& model, const CliquetContract& contract, double x) {
    return pow_int(cf_z1(model, contract, x), contract.resets());
}

double expected_z1(const GeometricMeixnerModel& model, const CliquetContract& contract) {
    const PeriodContext ctx = make_context(model, contract);
    const double c = contract.local_cap();
    const double shift = contract.guarantee() / contract.resets();
    if (ctx.empty_below_cap()) return c - shift;
    const auto g = [&](double u) { return (std::expm1(u) - c) * ctx.f(u); };
    QuadConfig cfg = distribution_quad_config();
    cfg.abs_tol = 1e-13;
    cfg.rel_tol = 1e-12;
    QuadResult<double> q = integrate_finite(std::function<double(double)>(g),
                                            ctx.u_lo, ctx.cap_log, cfg);
    if (!q.converged) throw ConvergenceFailure("expected_z1: quadrature did not converge");
    return c - shift + q.value;
}

double default_dampening(const MeixnerParams& p) {
    return std::min(1.0, 0.5 * (pi + p.beta()) / p.alpha());
}

double expected_z1_fourier(const GeometricMeixnerModel& model, const CliquetContract& contract,
                           double damp) {
    if (!(damp > 0.0) || !std::isfinite(damp))
        throw DomainError("expected_z1_fourier: dampening must be > 0");
    const PeriodLaw law = period_law(model, contract.tau());
    const MeixnerParams& p = law.params;
    const double lc = std::log1p(contract.local_cap());
    // Continuation strip check up front (char_exponent would throw later).
    if (std::abs(p.alpha() * damp - p.beta()) >= pi)
        throw BranchError("expected_z1_fourier: dampening outside the continuation strip");

    const auto integrand = [&](double y) {
        const complex s{damp, y};
        const complex phi = char_function(p, complex(-y, damp), 1.0);
        return (std::exp((1.0 + s) * lc) / (s * (1.0 + s)) * phi).real();
    };
    const double rate = p.delta() * p.alpha();
    const auto envelope = [&](double y) {
        const double mod = std::exp(char_exponent(p, complex(-y, damp)).real());
        return std::exp((1.0 + damp) * lc) /
               (std::hypot(damp, y) * std::hypot(1.0 + damp, y)) * mod;
    };
    TailHandling tail{
        [](double) { return 0.0; },
        [&, envelope](double Y) { return 2.0 * envelope(Y) / rate; },
    };
    QuadConfig cfg = distribution_quad_config();
    cfg.abs_tol = 1e-11;
    const double hint = std::min(1.0 / rate, 30.0);
    QuadResult<double> q = integrate_semi_infinite(std::function<double(double)>(integrand),
                                                   0.0, hint, cfg, &tail);
    return contract.local_cap() - contract.guarantee() / contract.resets() - q.value / pi;
}

PriceReport price_distribution_method(const GeometricMeixnerModel& model,
                                      const CliquetContract& contract, const QuadConfig& cfg) {
    cfg.validate();
    PriceReport rep;
    rep.method = PricingMethod::distribution;
    rep.settings = cfg;

    const double disc = contract.notional() * std::exp(-model.rate() * contract.maturity());
    const double g = contract.guarantee();
    const int n = contract.resets();

    if (contract.floor_always_binds()) {
        rep.price = disc * (1.0 + g);
        rep.e_z1 = expected_z1(model, contract);
        return rep;
    }

    const PeriodContext ctx = make_context(model, contract);
    const QuadConfig icfg = inner_config(cfg);
    const double rho = contract.rho();
    const double pn = std::pow(ctx.atom, n);

    double m_err[5] = {0, 0, 0, 0, 0};
    double m[5] = {0, 0, 0, 0, 0};
    for (int k = 1; k <= 4; ++k) m[k] = z1_moment(ctx, contract, k, cfg, &m_err[k]);
    rep.e_z1 = m[1];

    // Cumulants of Z1 and moments of the sum S for the x -> 0 patch.
    const double k2 = m[2] - m[1] * m[1];
    const double k3 = m[3] - 3.0 * m[1] * m[2] + 2.0 * std::pow(m[1], 3);
    const double k4 = m[4] - 4.0 * m[1] * m[3] - 3.0 * m[2] * m[2] +
                      12.0 * m[1] * m[1] * m[2] - 6.0 * std::pow(m[1], 4);
    const double S1 = n * m[1];
    const double S2 = n * k2 + S1 * S1;
    const double S4 = n * k4 + 4.0 * (n * k3) * S1 + 3.0 * std::pow(n * k2, 2) +
                      6.0 * (n * k2) * S1 * S1 + std::pow(S1, 4);

    const double x0 = 1e-3;
    const double patch = x0 * 0.5 * S2;
    const double patch_err = std::pow(x0, 3) * std::abs(S4) / 72.0 +
                             x0 * n * (m_err[2] + 2.0 * std::abs(m[1]) * m_err[1]);

    const auto B = [&](double x) {
        return pow_int(1.0 + inner_transform(ctx, contract.local_cap(), x, icfg), n);
    };
    const auto integrand = [&](double x) {
        const complex phi = std::polar(1.0, x * rho) * B(x);
        return (1.0 - phi.real()) / (x * x);
    };
    const OscillatoryTail osc{rho, pn, 2.0 * n * ctx.left_mass, B};
    TailHandling tail{
        [osc](double X) { return osc.correction(X); },
        [osc](double X) { return osc.residual(X); },
    };
    QuadConfig ocfg = cfg;
    ocfg.max_subdivisions = std::max(cfg.max_subdivisions, 20000);
    const double hint = std::max(2.0 * pi / rho, 1.0);
    QuadResult<double> outer = integrate_semi_infinite(std::function<double(double)>(integrand),
                                                       x0, hint, ocfg, &tail);

    const double integral = (patch + outer.value) / pi;
    rep.integral_term = integral;
    rep.price = disc * (1.0 + g + 0.5 * n * m[1] + integral);
    rep.error_estimate =
        disc * (0.5 * n * m_err[1] + (patch_err + outer.error_estimate) / pi);
    return rep;
}

PriceReport price_fourier_method(const GeometricMeixnerModel& model,
                                 const CliquetContract& contract, const QuadConfig& cfg) {
    cfg.validate();
    PriceReport rep;
    rep.method = PricingMethod::fourier;
    rep.settings = cfg;

    const double disc = contract.notional() * std::exp(-model.rate() * contract.maturity());
    const double g = contract.guarantee();
    const int n = contract.resets();

    const PeriodLaw law = period_law(model, contract.tau());
    rep.e_z1 = expected_z1_fourier(model, contract, default_dampening(law.params));

    if (contract.floor_always_binds()) {
        rep.price = disc * (1.0 + g);
        return rep;
    }

    const PeriodContext ctx = make_context(model, contract);
    const QuadConfig icfg = inner_config(cfg);
    const double rho = contract.rho();
    const double pn = std::pow(ctx.atom, n);
    const auto B = [&](double y) {
        return pow_int(1.0 + inner_transform(ctx, contract.local_cap(), y, icfg), n);
    };
    const double hint = std::max(2.0 * pi / rho, 1.0);

    // Absolutely integrable part: Re[(1 - e^{iy rho}) B(y)] / (2 pi y^2).
    const auto abs_part = [&](double y) {
        const complex By = B(y);
        return (one_minus_cos(y * rho) * By.real() + std::sin(y * rho) * By.imag()) /
               (2.0 * pi * y * y);
    };
    const OscillatoryTail osc{rho, pn, 2.0 * n * ctx.left_mass, B};
    TailHandling abs_tail{
        [osc](double X) {
            double corr = 1.0 / X;
            if (osc.atom_pow > 1e-14 && osc.rho * X >= 16.0) corr -= osc.cosine_tail(X);
            return osc.atom_pow * corr / (2.0 * pi);
        },
        [osc](double X) { return osc.residual(X) / (2.0 * pi); },
    };
    QuadConfig ocfg = cfg;
    ocfg.max_subdivisions = std::max(cfg.max_subdivisions, 20000);
    QuadResult<double> absI = integrate_semi_infinite(std::function<double(double)>(abs_part),
                                                      0.0, hint, ocfg, &abs_tail);

    // Conditionally decaying component rho Im[B(y)] / (2 pi y): slow 1/y^2
    // envelope, oscillation-aware panels at the documented looser tolerance.
    const auto cond_part = [&](double y) { return rho * B(y).imag() / (2.0 * pi * y); };
    TailHandling cond_tail{
        [&, B](double Y) { return rho * B(Y).imag() / (2.0 * pi); },
        [&, B](double Y) {
            const complex BY = B(Y);
            return rho * (std::abs(BY.imag()) + 2.0 * std::abs(BY - pn) / Y) / (2.0 * pi);
        },
    };
    QuadConfig ccfg = cfg;
    ccfg.abs_tol = 2e-6;
    ccfg.rel_tol = 1e-6;
    ccfg.max_subdivisions = std::max(cfg.max_subdivisions, 20000);
    QuadResult<double> condI = integrate_semi_infinite(std::function<double(double)>(cond_part),
                                                       0.0, hint, ccfg, &cond_tail);

    // Gil-Pelaez closed form of the same component; disagreement beyond its
    // own error estimate is the slow-oscillation warning, folded into the
    // reported error.
    const double cond_closed = -0.25 * rho * (1.0 - pn);
    const double osc_warning =
        std::max(0.0, std::abs(condI.value - cond_closed) - condI.error_estimate);

    const double expected_plus = 2.0 * (absI.value - condI.value) + 0.5 * rho * pn;
    rep.integral_term = expected_plus;
    rep.price = disc * (1.0 + g + expected_plus);
    rep.error_estimate =
        disc * (2.0 * (absI.error_estimate + condI.error_estimate + osc_warning));
    return rep;
}

} // namespace meixner
