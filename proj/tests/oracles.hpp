#pragma once

#include <cmath>

// Independent closed forms and frozen reference values the tests compare
// against. The constants were computed with 40-digit arbitrary-precision
// arithmetic from the defining formulas, not with the code under test.
namespace oracle {

/// Infinite-line solution of u_t = kappa u_xx from step data (1 left of x0,
/// 0 right of it): u = erfc((x - x0) / (2 sqrt(kappa t))) / 2.
inline double heat_step(double x, double t, double kappa, double x0) {
    return 0.5 * std::erfc((x - x0) / (2.0 * std::sqrt(kappa * t)));
}

/// Closed form of r' = rate * r (1 - r), r(0) = r0.
inline double logistic(double r0, double rate, double t) {
    const double g = std::exp(rate * t);
    return r0 * g / (1.0 + r0 * (g - 1.0));
}

// Kink profile values: rho(z~) = (1 - tanh(z~/sqrt(24)))^2 / 4.
inline constexpr double kProfileAtSqrt24 = 0.01420933661861103859; // rho(sqrt(24))
inline constexpr double kProfileD1At0 = -0.10206207261596575409;   // rho'(0) = -1/(2 sqrt(24))
inline constexpr double kProfileD2At0 = 0.02083333333333333333;    // rho''(0) = 1/48

inline constexpr double kKinkSpeed = 2.04124145231931508183;  // 5/sqrt(6)
inline constexpr double kKinkDecay = 0.81649658092772603273;  // sqrt(2/3)

/// Least-squares slope of x(t) = 2t + ln(t)/2 sampled at 51 equispaced
/// points on [50, 100] (a synthetic trace with a slow drift term).
inline constexpr double kLogTraceSlope = 2.006828807635629;

/// Half-level speed of the forward-Euler step-data run (D=U=eps=1, domain
/// [0,400] with 4001 nodes, t_end=100, snapshots every 0.5, trailing-half
/// fit), measured with an independent array-language implementation of the
/// same discretization. Sits below 2 by the slow front correction ~ -3/(2t).
inline constexpr double kPulledFrontFitSpeed = 1.9725294422147932;

} // namespace oracle
