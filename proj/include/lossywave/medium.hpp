#pragma once

namespace lossywave {

/// Physical constants of the quiescent medium. Any coherent unit system;
/// the library never converts units.
struct MediumParams {
    double lambda;   ///< second viscosity coefficient
    double mu;       ///< dynamic viscosity
    double rho_bar;  ///< unperturbed density
    double c;        ///< speed of sound

    /// Throws InvalidParameterError unless rho_bar > 0, c > 0, mu >= 0 and
    /// lambda + 2 mu >= 0 (a zero sum is the admissible lossless limit).
    void validate() const;
};

/// nu = (lambda + 2 mu) / rho_bar, the coefficient of the mixed
/// third-derivative damping term. Zero for a lossless medium.
double effective_diffusivity(const MediumParams& m);

/// k_c = 2 rho_bar c / (lambda + 2 mu) = 2 c / nu. Wavenumbers above k_c
/// evolve diffusively instead of propagating. Throws LosslessMediumError
/// when lambda + 2 mu == 0 (no finite cutoff).
double cutoff_wavenumber(const MediumParams& m);

}  // namespace lossywave
