#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <meixner/errors.hpp>
#include <meixner/measure_change.hpp>

#include "support/oracles.hpp"

#include <cmath>

using namespace meixner;

namespace {
const MeixnerParams base{1.0, 0.0, 1.0, 0.0};
const MeixnerParams skewed{0.3, -0.5, 0.5, 0.0};
} // namespace

TEST_CASE("simple density ratio exponent") {
    const SimpleChangeSpec same{0.0};
    CHECK(log_levy_density_ratio(base, same, 0.7) == 0.0);
    CHECK(log_levy_density_ratio(base, same, -2.3) == 0.0);

    const SimpleChangeSpec spec{0.5};
    CHECK(log_levy_density_ratio(base, spec, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
    for (double z : {0.3, -1.7})
        CHECK(log_levy_density_ratio(base, spec, 2.0 * z) ==
              doctest::Approx(2.0 * log_levy_density_ratio(base, spec, z)).epsilon(1e-14));
    CHECK_THROWS_AS((void)log_levy_density_ratio(base, spec, 0.0), DomainError);
}

TEST_CASE("general density ratio exponent") {
    // alpha* = alpha, delta* = delta reduces to the simple form.
    const GeneralChangeSpec g1{1.0, 0.5, 1.0};
    const SimpleChangeSpec s1{0.5};
    for (double z : {0.4, -0.9, 3.0, -6.0})
        CHECK(log_levy_density_ratio(base, g1, z) ==
              doctest::Approx(log_levy_density_ratio(base, s1, z)).epsilon(1e-12));

    // alpha* = alpha, beta* = beta gives the constant ln(delta*/delta).
    const GeneralChangeSpec g2{1.0, 0.0, 2.5};
    for (double z : {0.2, -4.0})
        CHECK(log_levy_density_ratio(base, g2, z) ==
              doctest::Approx(std::log(2.5)).epsilon(1e-13));

    // z -> 0 expansion: ln(delta* alpha*/(delta alpha)) + (b*/a* - b/a) z + O(z^2).
    const GeneralChangeSpec g3{1.4, 0.3, 0.8};
    const double c0 = std::log(g3.delta_star * g3.alpha_star / (base.delta() * base.alpha()));
    const double c1 = g3.beta_star / g3.alpha_star - base.beta() / base.alpha();
    for (double z : {1e-6, -1e-6}) {
        CHECK(log_levy_density_ratio(base, g3, z) ==
              doctest::Approx(c0 + c1 * z).epsilon(1e-10));
    }

    // The exact ratio property: e^{h(z)} nu_Q(z) = nu_P(z).
    const MeixnerParams target{1.4, 0.3, 0.8, 0.0};
    for (double z : {0.5, -2.0, 7.0}) {
        const double lhs = std::exp(log_levy_density_ratio(base, g3, z)) * levy_density(base, z);
        CHECK(lhs == doctest::Approx(levy_density(target, z)).epsilon(1e-12));
    }
}

TEST_CASE("simple change preserves alpha and delta and shifts the drift consistently") {
    const SimpleChangeSpec spec{0.5};
    const MeixnerParams out = change_measure(base, spec);
    CHECK(out.alpha() == base.alpha());
    CHECK(out.delta() == base.delta());
    CHECK(out.beta() == spec.beta_star);

    // Two routes to theta* - theta agree (Eq-level identity).
    const double via_params = drift_theta(out) - drift_theta(base);
    CHECK(via_params == doctest::Approx(drift_shift(base, spec)).epsilon(1e-9));

    // Identity change returns identical parameters.
    const MeixnerParams same = change_measure(base, SimpleChangeSpec{0.0});
    CHECK(same.beta() == base.beta());
    CHECK(same.mu() == base.mu());

    // Sign: beta* > beta implies theta* > theta (pointwise positive integrand).
    CHECK(drift_shift(base, spec) > 0.0);
    CHECK(drift_shift(base, SimpleChangeSpec{-0.5}) < 0.0);

    // Pointwise positivity of the combined integrand on a grid.
    for (double z : {0.1, 0.8, 2.5, -0.3, -1.9}) {
        const double v = (std::exp(spec.beta_star * z) - std::exp(0.0 * z)) / std::sinh(pi * z);
        CHECK(v > 0.0);
    }
}

TEST_CASE("simple change on a skewed base against the Levy-measure drift identity") {
    const SimpleChangeSpec spec{0.3};
    const MeixnerParams out = change_measure(skewed, spec);
    CHECK(out.alpha() == skewed.alpha());
    CHECK(out.delta() == skewed.delta());
    const double shift = drift_shift(skewed, spec);
    CHECK(drift_theta(out) - drift_theta(skewed) == doctest::Approx(shift).epsilon(1e-9));

    // Independent oracle: theta* - theta = int z (e^{h(z)} - 1) d nu_Q(z),
    // assembled from levy_density and the ratio exponent.
    const auto integrand = [&](double z) {
        return z * std::expm1(log_levy_density_ratio(skewed, spec, z)) * levy_density(skewed, z);
    };
    QuadConfig cfg = distribution_quad_config();
    QuadResult<double> win = integrate_principal_value(
        std::function<double(double)>(integrand), 0.0, -0.25, 0.25, cfg);
    double total = win.value;
    for (int sign : {+1, -1}) {
        const auto f = [&](double s) { return integrand(sign * (0.25 + s)); };
        total += integrate_semi_infinite(std::function<double(double)>(f), 0.0, 0.2, cfg).value;
    }
    CHECK(total == doctest::Approx(shift).epsilon(1e-8));
}

TEST_CASE("general change reductions") {
    // alpha* = alpha, delta* = delta: agrees with the simple change.
    GeneralChangeDiagnostics diag;
    const MeixnerParams g = change_measure(base, GeneralChangeSpec{1.0, 0.5, 1.0}, &diag);
    const MeixnerParams s = change_measure(base, SimpleChangeSpec{0.5});
    CHECK_FALSE(diag.pv_regularized);
    CHECK(g.alpha() == doctest::Approx(s.alpha()).epsilon(1e-14));
    CHECK(g.beta() == doctest::Approx(s.beta()).epsilon(1e-14));
    CHECK(g.delta() == doctest::Approx(s.delta()).epsilon(1e-14));
    CHECK(g.mu() == doctest::Approx(s.mu()).epsilon(1e-10).scale(1.0));

    // Full identity.
    const MeixnerParams id = change_measure(base, GeneralChangeSpec{1.0, 0.0, 1.0});
    CHECK(id.mu() == doctest::Approx(0.0).epsilon(1e-11).scale(1.0));

    // Reduction chain on random parameter sets.
    oracles::Lcg rng(2024);
    for (int i = 0; i < 5; ++i) {
        const MeixnerParams q{rng.uniform(0.2, 2.0), rng.uniform(-2.5, 2.5),
                              rng.uniform(0.2, 3.0), rng.uniform(-0.5, 0.5)};
        const double bs = rng.uniform(-2.5, 2.5);
        const MeixnerParams gg = change_measure(q, GeneralChangeSpec{q.alpha(), bs, q.delta()});
        const MeixnerParams ss = change_measure(q, SimpleChangeSpec{bs});
        CHECK(gg.mu() == doctest::Approx(ss.mu()).epsilon(1e-10).scale(1.0));
    }
}

TEST_CASE("general change with all four parameters moving") {
    GeneralChangeDiagnostics diag;
    const GeneralChangeSpec spec{1.4, 0.3, 0.8};
    const MeixnerParams out = change_measure(base, spec, &diag);
    CHECK(out.alpha() == spec.alpha_star);
    CHECK(out.beta() == spec.beta_star);
    CHECK(out.delta() == spec.delta_star);
    CHECK(diag.pv_regularized); // delta* alpha* != delta alpha

    // Drift consistency against the Levy-Ito compensation integral,
    // evaluated through the density-ratio route as a principal value.
    const auto integrand = [&](double z) {
        return z * std::expm1(log_levy_density_ratio(base, spec, z)) * levy_density(base, z);
    };
    QuadConfig cfg = distribution_quad_config();
    QuadResult<double> win = integrate_principal_value(
        std::function<double(double)>(integrand), 0.0, -0.5, 0.5, cfg);
    double total = win.value;
    for (int sign : {+1, -1}) {
        const auto f = [&](double s) { return integrand(sign * (0.5 + s)); };
        total += integrate_semi_infinite(std::function<double(double)>(f), 0.0, 0.3, cfg).value;
    }
    CHECK(drift_theta(out) - drift_theta(base) == doctest::Approx(total).epsilon(1e-8));
}

TEST_CASE("novikov integral") {
    // h == 0: the integrand vanishes identically.
    CHECK(novikov_integral(base, [](double) { return 0.0; }) == doctest::Approx(0.0));

    // Simple change: finite, and the integrand matches its z -> 0 series.
    const SimpleChangeSpec spec{0.5};
    const auto h = [&](double z) { return log_levy_density_ratio(base, spec, z); };
    const double value = novikov_integral(base, h);
    CHECK(std::isfinite(value));
    CHECK(value > 0.0);

    const double kappa = (spec.beta_star - base.beta()) / base.alpha();
    const double limit = base.delta() * kappa * kappa / (2.0 * pi / base.alpha());
    // L0 = delta (beta*-beta)^2 / (2 pi alpha); first-order factor (1 + (2k/3 + b/a) z).
    CHECK(limit == doctest::Approx(0.25 / (2.0 * pi)).epsilon(1e-12));
    for (double z : {1e-4, 1e-5}) {
        const double series = limit * (1.0 + (2.0 * kappa / 3.0 + base.beta() / base.alpha()) * z);
        CHECK(novikov_integrand(base, h, z) == doctest::Approx(series).epsilon(1e-6));
    }

    // Bracket nonnegativity: 1 - e^h + h e^h >= 0, equality only at h = 0.
    for (double x : {-3.0, -0.7, -1e-9, 1e-9, 0.4, 2.0})
        CHECK(one_minus_exp_plus_xexp(x) > 0.0);
    CHECK(one_minus_exp_plus_xexp(0.0) == 0.0);

    // Generalized change with delta* alpha* != delta alpha: the bracket
    // tends to a positive constant against the z^-2 measure, so the
    // integral diverges and must be reported as such.
    const GeneralChangeSpec gen{1.4, 0.3, 0.8};
    const auto hg = [&](double z) { return log_levy_density_ratio(base, gen, z); };
    CHECK_THROWS_AS((void)novikov_integral(base, hg), DivergenceDetected);

    // Mass-preserving generalized change (delta* alpha* = delta alpha) stays finite.
    const GeneralChangeSpec gen_ok{2.0, 0.3, 0.5};
    const auto hok = [&](double z) { return log_levy_density_ratio(base, gen_ok, z); };
    CHECK(std::isfinite(novikov_integral(base, hok)));
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(SimpleChangeSpec{pi}, DomainError);
    CHECK_THROWS_AS(SimpleChangeSpec{-4.0}, DomainError);
    CHECK_THROWS_AS(GeneralChangeSpec(0.0, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(GeneralChangeSpec(1.0, 0.0, -1.0), DomainError);
    CHECK_THROWS_AS(GeneralChangeSpec(1.0, 3.5, 1.0), DomainError);
}
