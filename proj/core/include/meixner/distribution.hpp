#pragma once

#include <meixner/quadrature.hpp>

namespace meixner {

/// Parameter quadruple of the Meixner law M(alpha, beta, delta, mu):
/// scale alpha > 0, skewness beta in (-pi, pi), peakedness delta > 0,
/// location mu.  Validated on construction, immutable afterwards.
class MeixnerParams {
public:
    MeixnerParams(double alpha, double beta, double delta, double mu);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double delta() const { return delta_; }
    double mu() const { return mu_; }

private:
    double alpha_, beta_, delta_, mu_;
};

/// Levy triplet (theta, 0, nu) of the associated pure-jump process.
/// The jump measure has infinite total mass (it behaves like
/// delta alpha / (pi z^2) near zero), so it is carried as a density
/// descriptor, never as a finite measure object.
struct LevyTriplet {
    double theta;
    double diffusion; // identically zero: no Brownian part
    MeixnerParams jump_params;
};

struct Cumulants {
    double mean;
    double variance;
    double skewness;
    double kurtosis; // full kurtosis, 3 for a Gaussian
};

/// Drift theta = mu + delta alpha tan(beta/2).
double drift_theta(const MeixnerParams& p);

LevyTriplet levy_triplet(const MeixnerParams& p);

/// Levy measure density delta e^{beta z/alpha} / (z sinh(pi z/alpha)),
/// strictly positive on z != 0; DomainError at z = 0.
double levy_density(const MeixnerParams& p, double z);

/// Characteristic exponent psi(u) = i u mu + 2 delta [ln cos(beta/2)
/// - ln cosh((alpha u - i beta)/2)], principal branch.  Accepts complex u
/// inside the continuation strip |alpha Im(u) - beta| < pi (needed at
/// u = -i for the martingale drift and u = i theta - y for dampened
/// Fourier integrals); BranchError outside it.
complex char_exponent(const MeixnerParams& p, complex u);

/// phi_{M_t}(u) = exp(t psi(u)); |phi| <= 1 for real u.
complex char_function(const MeixnerParams& p, complex u, double t);

/// log of the density of M_t; kept separate because tail handling and the
/// sampler need it without the final exponentiation.
double log_pdf(const MeixnerParams& p, double t, double x);

/// Density of M_t, evaluated in log space and exponentiated last.
double pdf(const MeixnerParams& p, double t, double x);

/// Density through Fourier inversion of the characteristic function.
/// Exists as an independent cross-check of pdf(); the two agree to 1e-8.
double pdf_by_inversion(const MeixnerParams& p, double t, double x);

struct InversionResult {
    double value;
    double imag_residue; // conjugate-symmetry residual of the full-line integral
};
InversionResult pdf_by_inversion_diag(const MeixnerParams& p, double t, double x);

/// Distribution function of M_t by quadrature of the density with analytic
/// exponential tail cutoffs; monotone, clamped to [0, 1].
double cdf(const MeixnerParams& p, double t, double x);

/// Mean, variance, skewness and kurtosis of M_t in closed form.
Cumulants cumulants(const MeixnerParams& p, double t);

/// Characteristic exponent through the Levy-Khinchin integral against the
/// jump measure; numerical cross-check of the closed form (agreement 1e-7).
complex char_exponent_levy_khinchin(const MeixnerParams& p, double u);

/// Law of c X + m for X ~ M(p): (c alpha, beta, delta, c mu + m), c > 0.
MeixnerParams affine_transform(const MeixnerParams& p, double c, double m);

/// Law of X1 + X2 for independent Meixner variables sharing alpha and beta.
MeixnerParams convolve(const MeixnerParams& p1, const MeixnerParams& p2);

/// Closed-form moment matching: inverts the cumulant formulas of M_t.
/// Feasibility requires kurtosis > 3 + 1.5 skewness^2 for a representable
/// beta; InfeasibleMoments otherwise.
MeixnerParams fit_by_moments(double mean, double variance, double skewness,
                             double kurtosis, double t);

/// Interval outside which each tail of M_t holds mass below eps, derived
/// from the exponential decay rates (beta -+ pi)/alpha of the density.
struct SupportInterval {
    double lo;
    double hi;
    double tail_mass_bound; // per-side bound actually achieved
};
SupportInterval support_interval(const MeixnerParams& p, double t, double eps);

} // namespace meixner
