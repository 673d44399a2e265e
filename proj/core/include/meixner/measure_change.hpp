#pragma once

#include <meixner/distribution.hpp>

#include <functional>

namespace meixner {

/// Simple structure-preserving change: only the skewness slot moves.
struct SimpleChangeSpec {
    double beta_star;
    explicit SimpleChangeSpec(double beta_star);
};

/// Generalized change: all of (alpha, beta, delta) may move.
struct GeneralChangeSpec {
    double alpha_star;
    double beta_star;
    double delta_star;
    GeneralChangeSpec(double alpha_star, double beta_star, double delta_star);
};

/// Radon-Nikodym exponent h(z) = log(d nu_P / d nu_Q)(z).
/// Simple form: (beta* - beta) z / alpha.  DomainError at z = 0 by
/// convention; the linear form extends continuously.
double log_levy_density_ratio(const MeixnerParams& q, const SimpleChangeSpec& spec, double z);

/// General form: (beta*/alpha* - beta/alpha) z
///               + ln(delta* sinh(pi z/alpha) / (delta sinh(pi z/alpha*))).
double log_levy_density_ratio(const MeixnerParams& q, const GeneralChangeSpec& spec, double z);

/// Parameters of the law under the new measure: (alpha, beta*, delta, mu*).
/// alpha and delta are untouched; mu* picks up the jump-compensation
/// integral, evaluated as one combined integrand (each measure alone has
/// infinite mass near zero, only the combination is integrable).
MeixnerParams change_measure(const MeixnerParams& q, const SimpleChangeSpec& spec);

struct GeneralChangeDiagnostics {
    /// The combined drift integrand behaves like (delta* alpha* - delta
    /// alpha)/(pi z) near zero; when that coefficient is nonzero the
    /// integral exists only as a principal value and this flag reports it.
    bool pv_regularized = false;
    double integral_error = 0.0;
};

/// Parameters under the generalized change: (alpha*, beta*, delta*, mu_bar).
MeixnerParams change_measure(const MeixnerParams& q, const GeneralChangeSpec& spec,
                             GeneralChangeDiagnostics* diag = nullptr);

/// theta* - theta = delta int (e^{beta* z/alpha} - e^{beta z/alpha})
///                  / sinh(pi z/alpha) dz,
/// the drift shift of the simple change (equal to int z [d nu_P - d nu_Q]).
double drift_shift(const MeixnerParams& q, const SimpleChangeSpec& spec);

/// Integrand [1 - e^{h} + h e^{h}] d nu_Q/dz of the Novikov criterion;
/// nonnegative, with a stable series evaluation of the bracket near h = 0.
double novikov_integrand(const MeixnerParams& q,
                         const std::function<double(double)>& h, double z);

/// Value of the Novikov integral, evaluated as one combined integrand over
/// paired dyadic shells around zero plus geometric outer panels.  Throws
/// DivergenceDetected when the shell or panel sums grow without bound
/// (which happens for the generalized change whenever delta* alpha* !=
/// delta alpha: the bracket tends to a positive constant against a z^-2
/// measure).
double novikov_integral(const MeixnerParams& q, const std::function<double(double)>& h);

} // namespace meixner
