#pragma once

#include <complex>

#include "lossywave/medium.hpp"

namespace lossywave {

using Complex = std::complex<double>;

enum class Regime { Propagating, Degenerate, Diffusive };

const char* to_string(Regime regime);

/// Relative half-width of the band around nu*k/(2c) == 1 classified as
/// Degenerate. Inside the band the two-exponential modal basis is
/// ill-conditioned and the exact solver switches to the repeated-root basis.
inline constexpr double kDegenerateBand = 1e-9;

/// Exact roots of omega^2 + i nu k^2 omega - c^2 k^2 = 0 for one wavenumber.
///
/// Conventions (fixed so that root identities are testable):
///   f = sqrt(1 - (nu k / 2c)^2), taken as the non-negative real root below
///       cutoff and +i sqrt((nu k/2c)^2 - 1) above;
///   omega1 = +k c f - i nu k^2 / 2  (the slowly decaying root above cutoff),
///   omega2 = -k c f - i nu k^2 / 2.
struct DispersionResult {
    double k;
    Complex f;
    Complex omega1;
    Complex omega2;
    Regime regime;
};

/// Per-step modal gains g_j = exp(-i omega_j dt).
struct AmplificationFactor {
    Complex g1;
    Complex g2;
    double dt;
};

/// Per-step phase shifts of the two propagating branches, beta_{1,2} = +-k c f dt.
struct PhaseShift {
    double beta1;
    double beta2;
};

Complex regime_factor(const MediumParams& m, double k);

DispersionResult solve_dispersion(const MediumParams& m, double k);

AmplificationFactor amplification_factor(const DispersionResult& d, double dt);

/// Requires regime == Propagating; throws DiffusiveRegimeError at and above
/// cutoff where the phase shift is undefined.
PhaseShift phase_shift(const DispersionResult& d, double dt);

/// c * Re(f) for the propagating branch; equals c exactly in the lossless
/// limit. Throws ZeroWavenumberError for k == 0 and DiffusiveRegimeError
/// outside the propagating regime.
double phase_speed(const MediumParams& m, const DispersionResult& d);

}  // namespace lossywave
