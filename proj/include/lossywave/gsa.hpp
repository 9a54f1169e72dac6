#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lossywave/dispersion.hpp"
#include "lossywave/grid.hpp"

namespace lossywave {

/// Both roots of the discrete characteristic polynomial of the explicit
/// three-level stencil at nondimensional wavenumber theta = k dx:
///
///   G^2 - (2 + D (cfl^2 + visc)) G + (1 + D visc) = 0,  D = 2 cos(theta) - 2,
///
/// with cfl = c dt / dx and visc = nu dt / dx^2 (derivation documented in
/// gsa.cpp). Complex pairs are returned positive-imaginary first, real pairs
/// larger-modulus first. theta in [0, pi], cfl > 0, visc >= 0.
std::array<Complex, 2> numerical_amplification(double theta, double cfl, double visc);

/// Dense 2049-point sample of max |G_num| over theta in [0, pi] plus
/// golden-section refinement near the maximum. stable iff
/// max_gain <= 1 + 1e-12.
StabilityCertificate stability_check(const GridSpec& spec, const MediumParams& m);

/// Numerical amplification roots across theta, paired with the exact
/// per-step gains at k = theta / dx.
struct SchemeSpectrum {
    std::vector<double> theta;
    std::vector<std::array<Complex, 2>> g_num;
    std::vector<std::array<Complex, 2>> g_exact;
    double cfl = 0.0;
    double visc = 0.0;
};

SchemeSpectrum scheme_spectrum(const GridSpec& spec, const MediumParams& m, int n_theta);

struct DispersionErrorRecord {
    double theta;
    double abs_gnum_max;
    double abs_gexact_max;
    double amplitude_error;               ///< abs_gnum_max - abs_gexact_max
    std::optional<double> phase_error;    ///< set below cutoff only
};

/// Gain and phase errors of the scheme against the exact amplification
/// factor at one theta. Roots are paired by sign of phase, falling back to
/// modulus ordering above cutoff; the phase error is reported for the
/// positive-phase pair and only where the exact mode propagates.
DispersionErrorRecord dispersion_error_at(const GridSpec& spec, const MediumParams& m,
                                          double theta);

/// dispersion_error_at sampled on a uniform inclusive grid over [0, pi].
std::vector<DispersionErrorRecord> dispersion_error_map(const GridSpec& spec,
                                                        const MediumParams& m,
                                                        int n_theta);

}  // namespace lossywave
