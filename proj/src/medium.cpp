#include "lossywave/medium.hpp"

#include <cmath>

#include "lossywave/errors.hpp"

namespace lossywave {

void MediumParams::validate() const {
    if (!std::isfinite(lambda) || !std::isfinite(mu) || !std::isfinite(rho_bar) ||
        !std::isfinite(c)) {
        throw InvalidParameterError("medium parameters must be finite");
    }
    if (rho_bar <= 0.0) throw InvalidParameterError("rho_bar must be > 0");
    if (c <= 0.0) throw InvalidParameterError("c must be > 0");
    if (mu < 0.0) throw InvalidParameterError("mu must be >= 0");
    if (lambda + 2.0 * mu < 0.0) {
        throw InvalidParameterError("lambda + 2 mu must be >= 0");
    }
}

double effective_diffusivity(const MediumParams& m) {
    m.validate();
    return (m.lambda + 2.0 * m.mu) / m.rho_bar;
}

double cutoff_wavenumber(const MediumParams& m) {
    m.validate();
    const double total_viscosity = m.lambda + 2.0 * m.mu;
    if (total_viscosity == 0.0) {
        throw LosslessMediumError("lossless medium has no finite cutoff wavenumber");
    }
    return 2.0 * m.rho_bar * m.c / total_viscosity;
}

}  // namespace lossywave
