#pragma once

#include <meixner/numerics.hpp>

#include <functional>

namespace meixner {

/// Tolerances and budgets for one integration call.
struct QuadConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_subdivisions = 4000;
    /// Coefficient C of the generic dominating tail |int_X^inf f| <= C / X,
    /// used by integrate_semi_infinite when no TailHandling is supplied.
    double truncation_tail_bound = 2.0;

    void validate() const;
};

/// Defaults for distribution-level integrals (density, cdf, Levy-Khinchin).
inline QuadConfig distribution_quad_config() { return {1e-10, 1e-9, 4000, 2.0}; }

/// Defaults for pricing integrals; accuracy targets there are 1e-6 relative.
inline QuadConfig pricing_quad_config() { return {1e-8, 1e-7, 4000, 2.0}; }

template <class T>
struct QuadResult {
    T value{};
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

/// Analytic knowledge about the remainder of a semi-infinite integral beyond
/// the truncation point X: `correction(X)` is added to the value and
/// `residual_bound(X)` bounds the error of that correction.
struct TailHandling {
    std::function<double(double)> correction;
    std::function<double(double)> residual_bound;
};

/// Adaptive finite-interval quadrature (nested Fejer-2 pair, open rule, so
/// integrable endpoint singularities are fine).  Returns converged = false
/// instead of throwing when the subdivision budget runs out; throws
/// NonFiniteIntegrand if f produces NaN/Inf at a node.
QuadResult<double> integrate_finite(const std::function<double(double)>& f,
                                    double a, double b, const QuadConfig& cfg);
QuadResult<complex> integrate_finite(const std::function<complex(double)>& f,
                                     double a, double b, const QuadConfig& cfg);

/// Integral over (a, inf): adaptive panels of geometrically growing width
/// (initial width decay_hint, growth capped at 16x) plus tail handling.
/// Without a TailHandling the tail is estimated empirically from the panel
/// decay and capped by truncation_tail_bound / X.  Throws ConvergenceFailure
/// when the running tail estimate cannot be brought below tolerance within
/// the subdivision budget.
QuadResult<double> integrate_semi_infinite(const std::function<double(double)>& f,
                                           double a, double decay_hint,
                                           const QuadConfig& cfg,
                                           const TailHandling* tail = nullptr);
QuadResult<complex> integrate_semi_infinite(const std::function<complex(double)>& f,
                                            double a, double decay_hint,
                                            const QuadConfig& cfg,
                                            const TailHandling* tail = nullptr);

/// Cauchy principal value of int_a^b f around one interior singularity.
/// Nodes are paired symmetrically about the singularity at matched offsets,
/// which cancels the odd 1/(x-s) component by construction.
QuadResult<double> integrate_principal_value(const std::function<double(double)>& f,
                                             double singularity, double a, double b,
                                             const QuadConfig& cfg);

} // namespace meixner
