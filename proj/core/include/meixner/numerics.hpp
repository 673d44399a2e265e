#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace meixner {

using complex = std::complex<double>;

constexpr double pi = 3.14159265358979323846;

/// 1 - cos(x) without cancellation near x = 0.
inline double one_minus_cos(double x) {
    const double s = std::sin(0.5 * x);
    return 2.0 * s * s;
}

/// x - sin(x); series below |x| = 0.1 where direct subtraction loses digits.
inline double x_minus_sin(double x) {
    if (std::abs(x) >= 0.1) return x - std::sin(x);
    const double x2 = x * x;
    // x^3/6 * (1 - x^2/20 * (1 - x^2/42 * (1 - x^2/72)))
    return x * x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0 * (1.0 - x2 / 72.0)));
}

/// e^{i theta} - 1 evaluated as (-2 sin^2(theta/2), sin theta); exact at theta = 0.
inline complex cis_minus_one(double theta) {
    const double s = std::sin(0.5 * theta);
    return {-2.0 * s * s, std::sin(theta)};
}

/// 1 - e^x + x e^x = sum_{k>=2} (k-1) x^k / k!.  Nonnegative, zero only at x = 0.
/// Series below |x| = 0.25; the direct form loses all digits near 0.
inline double one_minus_exp_plus_xexp(double x) {
    if (std::abs(x) >= 0.25) {
        const double ex = std::exp(x);
        return 1.0 - ex + x * ex;
    }
    double term = 0.5 * x * x; // k = 2 term
    double sum = term;
    for (int k = 3; k < 24; ++k) {
        term *= x / k;
        const double add = term * (k - 1);
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

/// log(sinh(x)) for x > 0, safe against overflow of sinh for large x.
inline double log_sinh(double x) {
    if (x > 36.0) return x - 0.6931471805599453094 + std::log1p(-std::exp(-2.0 * x));
    return std::log(std::sinh(x));
}

/// pi/2 - Si(z) for z >= 16 via the asymptotic auxiliary functions
/// f(z), g(z):  pi/2 - Si(z) = f(z) cos z + g(z) sin z.
/// Relative accuracy better than 1e-9 at z = 16, improving rapidly with z.
inline double si_upper_tail(double z) {
    const double z2 = z * z;
    const double f = (1.0 - 2.0 / z2 * (1.0 - 12.0 / z2 * (1.0 - 30.0 / z2))) / z;
    const double g = (1.0 - 6.0 / z2 * (1.0 - 20.0 / z2 * (1.0 - 42.0 / z2))) / z2;
    return f * std::cos(z) + g * std::sin(z);
}

inline bool is_finite(const complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

} // namespace meixner
