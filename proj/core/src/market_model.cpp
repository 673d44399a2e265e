#include <meixner/market_model.hpp>
#include <meixner/errors.hpp>

#include <cmath>

namespace meixner {

double martingale_drift(double r, const MeixnerParams& p) {
    if (!std::isfinite(r)) throw DomainError("martingale_drift: non-finite rate");
    const double ab = p.alpha() + p.beta();
    if (!(ab > -pi && ab < pi))
        throw MomentExplosion("martingale_drift: requires alpha + beta in (-pi, pi)");
    return r - p.mu() -
           2.0 * p.delta() * std::log(std::cos(0.5 * p.beta()) / std::cos(0.5 * ab));
}

GeometricMeixnerModel::GeometricMeixnerModel(double s0, double r, const MeixnerParams& q_params)
    : s0_(s0), r_(r), q_params_(q_params) {
    if (!(s0 > 0.0) || !std::isfinite(s0))
        throw DomainError("GeometricMeixnerModel: initial price must be > 0");
    if (!(r >= 0.0) || !std::isfinite(r))
        throw DomainError("GeometricMeixnerModel: rate must be >= 0");
    b_ = martingale_drift(r, q_params);
    // Same restriction through psi(-i); a mismatch means a broken drift.
    const double b_cf = r - char_exponent(q_params, complex(0.0, -1.0)).real();
    if (std::abs(b_ - b_cf) > 1e-10 * (1.0 + std::abs(b_)))
        throw Error("GeometricMeixnerModel: drift restriction mismatch between routes");
}

PeriodLaw period_law(const GeometricMeixnerModel& model, double tau) {
    if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("period_law: requires tau > 0");
    const MeixnerParams& p = model.params();
    return PeriodLaw{
        MeixnerParams(p.alpha(), p.beta(), p.delta() * tau, (p.mu() + model.drift_b()) * tau),
        tau};
}

double return_cdf(const PeriodLaw& law, double xi) {
    if (!(xi > -1.0)) throw DomainError("return_cdf: return must exceed -1");
    return cdf(law.params, 1.0, std::log1p(xi));
}

} // namespace meixner
