#pragma once

#include <meixner/distribution.hpp>

namespace meixner {

/// The unique drift b making e^{-rt} S_t a martingale:
///   b = r - mu - 2 delta ln(cos(beta/2) / cos((alpha+beta)/2)).
/// Requires alpha + beta in (-pi, pi) so that E[e^{M_t}] is finite;
/// MomentExplosion otherwise.
double martingale_drift(double r, const MeixnerParams& p);

/// Law of one reset-period log return Y_tau ~ M(alpha, beta, delta tau,
/// (mu+b) tau).  The period length is folded into the parameters, so the
/// density/cdf of Y_tau are pdf(params, 1, .) and cdf(params, 1, .).
struct PeriodLaw {
    MeixnerParams params;
    double tau;
};

/// Geometric stock model S_t = S0 exp(M_t + b t) under the risk-neutral
/// measure.  b is derived from (r, params) at construction and re-checked
/// against the characteristic-exponent route; it is never a free input.
class GeometricMeixnerModel {
public:
    GeometricMeixnerModel(double s0, double r, const MeixnerParams& q_params);

    double s0() const { return s0_; }
    double rate() const { return r_; }
    const MeixnerParams& params() const { return q_params_; }
    double drift_b() const { return b_; }

private:
    double s0_;
    double r_;
    MeixnerParams q_params_;
    double b_;
};

PeriodLaw period_law(const GeometricMeixnerModel& model, double tau);

/// Q(R_k <= xi) = Q(Y_tau <= ln(1+xi)); DomainError for xi <= -1.
double return_cdf(const PeriodLaw& law, double xi);

} // namespace meixner
