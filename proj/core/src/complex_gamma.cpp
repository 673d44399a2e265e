#include <meixner/complex_gamma.hpp>
#include <meixner/errors.hpp>

#include <cmath>

namespace meixner {
namespace {

// B_{2n} / (2n (2n-1)) for the Stirling series of log Gamma.
constexpr double stirling_coeff[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
    854513.0 / 63756.0,
    -236364091.0 / 1506960.0,
};

constexpr double half_log_two_pi = 0.91893853320467274178;

// Stirling series, valid once Re(w) >= 8.
complex stirling(complex w) {
    const complex inv = 1.0 / w;
    const complex inv2 = inv * inv;
    complex p = inv;
    complex series = 0.0;
    for (double c : stirling_coeff) {
        series += c * p;
        p *= inv2;
    }
    return (w - 0.5) * std::log(w) - w + half_log_two_pi + series;
}

// log Gamma for Re(z) >= 0.5: recurrence shift up, then Stirling.
complex log_gamma_right(complex z) {
    complex shifted_logs = 0.0;
    while (z.real() < 8.0) {
        shifted_logs += std::log(z);
        z += 1.0;
    }
    return stirling(z) - shifted_logs;
}

// log(1 + w) with a short series when w is tiny.
complex log1p_complex(complex w) {
    if (std::abs(w) < 1e-4) return w * (1.0 - w * (0.5 - w / 3.0));
    return std::log(1.0 + w);
}

// Branch-consistent log sin(pi z) for Im(z) >= 0:
//   sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z}),  |e^{2 pi i z}| <= 1.
// Each factor is analytic on the upper half plane, which keeps the
// reflection formula on the principal branch of log Gamma.
complex log_sin_pi_upper(complex z) {
    const complex i{0.0, 1.0};
    const complex w = std::exp(2.0 * pi * i * z);
    return complex(-0.6931471805599453094, 0.5 * pi) - i * pi * z + log1p_complex(-w);
}

} // namespace

complex log_gamma(complex z) {
    if (!is_finite(z)) throw DomainError("log_gamma: non-finite argument");
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw PoleError("log_gamma: pole at non-positive integer");

    if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
    if (z.real() >= 0.5) return log_gamma_right(z);

    // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z).
    const double log_pi = 1.1447298858494001741;
    return log_pi - log_sin_pi_upper(z) - log_gamma_right(1.0 - z);
}

double gamma_abs_squared_log(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b))
        throw DomainError("gamma_abs_squared_log: non-finite argument");
    if (a <= 0.0) throw DomainError("gamma_abs_squared_log: requires a > 0");
    return 2.0 * log_gamma(complex(a, std::abs(b))).real();
}

} // namespace meixner
