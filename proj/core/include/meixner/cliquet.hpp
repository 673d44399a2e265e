#pragma once

#include <meixner/market_model.hpp>

namespace meixner {

/// Globally-floored, locally-capped sum cliquet: pays
///   K (1 + max{g, sum_k min(c, R_k)})
/// at maturity over n equidistant reset periods of length tau = T / n.
class CliquetContract {
public:
    CliquetContract(double notional_k, double guarantee_g, double local_cap_c,
                    int resets_n, double maturity_t);

    double notional() const { return notional_k_; }
    double guarantee() const { return guarantee_g_; }
    double local_cap() const { return local_cap_c_; }
    int resets() const { return resets_n_; }
    double maturity() const { return maturity_t_; }

    double tau() const { return maturity_t_ / resets_n_; }
    /// rho = n c - g, the shift separating the capped sum from its ceiling.
    double rho() const { return resets_n_ * local_cap_c_ - guarantee_g_; }
    /// n c <= g forces sum_k Z_k <= 0 a.s., so the floor is always binding
    /// and the price collapses to K e^{-rT} (1+g).
    bool floor_always_binds() const { return resets_n_ * local_cap_c_ <= guarantee_g_; }

private:
    double notional_k_;
    double guarantee_g_;
    double local_cap_c_;
    int resets_n_;
    double maturity_t_;
};

enum class PricingMethod { distribution, fourier, monte_carlo };
const char* to_string(PricingMethod m);

struct PriceReport {
    double price = 0.0;
    PricingMethod method = PricingMethod::distribution;
    double e_z1 = 0.0;          // E[Z_1] diagnostic
    double integral_term = 0.0; // value of the method's outer integral
    double error_estimate = 0.0;
    QuadConfig settings;
};

/// Characteristic function of Z_1 = min(c, R_1) - g/n:
///   e^{-ixg/n} (e^{ixc} + int_{-inf}^{ln(1+c)} [e^{ix(e^u-1)} - e^{ixc}] f(u) du).
complex cf_z1(const GeometricMeixnerModel& model, const CliquetContract& contract, double x);

/// Same quantity via the distribution-function route (atom at the cap plus
/// exp-substituted density integrals split at u = 0); cross-check of cf_z1.
complex cf_z1_distribution_form(const GeometricMeixnerModel& model,
                                const CliquetContract& contract, double x);

/// cf of sum_k Z_k = cf_z1(x)^n by independence of the period returns.
complex cf_z_sum(const GeometricMeixnerModel& model, const CliquetContract& contract, double x);

/// E[Z_1] = c - g/n + int_{-inf}^{ln(1+c)} (e^u - 1 - c) f(u) du.
double expected_z1(const GeometricMeixnerModel& model, const CliquetContract& contract);

/// E[Z_1] through the dampened Fourier representation
///   c - g/n - (1/2pi) int (c+1)^{1+damp+iy} / ((damp+iy)(1+damp+iy))
///                         phi_Y(i damp - y) dy,
/// damp > 0 inside the continuation strip |alpha damp - beta| < pi.
double expected_z1_fourier(const GeometricMeixnerModel& model, const CliquetContract& contract,
                           double damp);

/// Dampening value admissible for these model parameters (used by the CLI
/// when no explicit damp is given).
double default_dampening(const MeixnerParams& p);

/// Price through the characteristic-function representation
///   C0 = K e^{-rT} (1 + g + (n/2) E[Z_1] + (1/pi) int_0^inf (1 - Re cf_z_sum(x)) / x^2 dx).
PriceReport price_distribution_method(const GeometricMeixnerModel& model,
                                      const CliquetContract& contract, const QuadConfig& cfg);

/// Price through the Fourier-transform route built on the kernel
///   I = int_0^inf Re[(1 + iy rho - e^{iy rho}) B(y)] / (2 pi y^2) dy,
///   B(y) = (1 + int_{-inf}^{ln(1+c)} [e^{iy(e^u-1-c)} - 1] f(u) du)^n.
/// The kernel integral alone equals E[(sum Z)^+]/2 - (rho/4) P(all periods
/// capped); the price therefore uses 2I + (rho/2) p^n, with p = Q(Y_tau >=
/// ln(1+c)).  Only the real part is integrable; the conditionally decaying
/// rho Im(B)/(2 pi y) component is integrated separately at a looser
/// tolerance and checked against its closed form.
PriceReport price_fourier_method(const GeometricMeixnerModel& model,
                                 const CliquetContract& contract, const QuadConfig& cfg);

} // namespace meixner
