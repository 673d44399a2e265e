#pragma once

#include <meixner/numerics.hpp>

namespace meixner {

/// Principal-branch log Gamma on the complex plane.
///
/// Stirling's series after shifting the argument to Re(z) >= 12; the left
/// half plane is reached through the reflection formula.  Relative accuracy
/// is ~1e-13 or better for |z| up to 1e6, which is what the Meixner density
/// needs: the gamma argument there is (delta t + i x / alpha) with delta t
/// possibly far below 1 and the imaginary part large.
///
/// Throws PoleError at non-positive real integers and DomainError on
/// non-finite input.
complex log_gamma(complex z);

/// log |Gamma(a + ib)|^2 = 2 Re log_gamma(a + ib), for a > 0.
///
/// Stays in log space: |Gamma(a+ib)|^2 decays like e^{-pi |b|} and would
/// underflow in value space for |b| beyond a few hundred.
double gamma_abs_squared_log(double a, double b);

} // namespace meixner
