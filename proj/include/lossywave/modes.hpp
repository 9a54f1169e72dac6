#pragma once

#include <span>
#include <vector>

#include "lossywave/dispersion.hpp"

namespace lossywave {

/// Modal amplitudes for one wavenumber. Non-degenerate solutions use the
/// two-root superposition a e^{-i omega1 t} + b e^{-i omega2 t}; coincident
/// roots (k == 0 or the degenerate band) use (a + b t) e^{-nu k^2 t / 2}.
struct ModeCoefficients {
    Complex a;
    Complex b;
    bool degenerate;
};

/// Fits (a, b) so that the modal solution reproduces p_hat(0) = p0 and
/// d/dt p_hat(0) = q0.
ModeCoefficients fit_mode(const DispersionResult& d, Complex p0, Complex q0);

/// Modal amplitude p_hat(t), t >= 0.
Complex evolve_mode(const ModeCoefficients& mc, const DispersionResult& d, double t);

/// Modal time derivative d/dt p_hat(t).
Complex evolve_mode_rate(const ModeCoefficients& mc, const DispersionResult& d, double t);

/// Evolves a real periodic initial-value problem exactly: transform both
/// fields, fit and evolve every mode, inverse transform. Direct evaluation
/// at any t >= 0, no time stepping. Output is checked to be real to 1e-10
/// of the field scale before the imaginary residue is discarded.
std::vector<double> evolve_field(std::span<const double> initial_p,
                                 std::span<const double> initial_q,
                                 const MediumParams& m, double length, double t);

}  // namespace lossywave
