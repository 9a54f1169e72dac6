#include "lossywave/dispersion.hpp"

#include <cmath>

#include "lossywave/errors.hpp"

namespace lossywave {

const char* to_string(Regime regime) {
    switch (regime) {
        case Regime::Propagating: return "Propagating";
        case Regime::Degenerate: return "Degenerate";
        case Regime::Diffusive: return "Diffusive";
    }
    return "?";
}

namespace {

void check_wavenumber(double k) {
    if (!std::isfinite(k) || k < 0.0) {
        throw InvalidParameterError("wavenumber must be finite and >= 0");
    }
}

Regime classify(double s) {
    if (std::abs(s - 1.0) <= kDegenerateBand) return Regime::Degenerate;
    return s < 1.0 ? Regime::Propagating : Regime::Diffusive;
}

}  // namespace

Complex regime_factor(const MediumParams& m, double k) {
    check_wavenumber(k);
    const double nu = effective_diffusivity(m);
    const double s = nu * k / (2.0 * m.c);
    // (1 - s)(1 + s) keeps full accuracy near the cutoff where 1 - s^2 -> 0.
    const double radicand = (1.0 - s) * (1.0 + s);
    if (s <= 1.0) return Complex(std::sqrt(radicand), 0.0);
    return Complex(0.0, std::sqrt(-radicand));
}

DispersionResult solve_dispersion(const MediumParams& m, double k) {
    const Complex f = regime_factor(m, k);
    const double nu = effective_diffusivity(m);
    const double s = nu * k / (2.0 * m.c);

    DispersionResult d;
    d.k = k;
    d.f = f;
    d.regime = classify(s);

    if (s <= 1.0) {
        const double re = k * m.c * f.real();
        const double im = -0.5 * nu * k * k;
        d.omega1 = Complex(re, im);
        d.omega2 = Complex(-re, im);
    } else {
        // Both roots are purely imaginary. The fast root adds same-sign
        // terms; the slow root comes from the product identity
        // omega1 omega2 = -c^2 k^2, which avoids the cancellation in
        // nu k^2 / 2 - k c |f| at large k.
        const double fast = 0.5 * nu * k * k + k * m.c * f.imag();
        d.omega2 = Complex(0.0, -fast);
        d.omega1 = Complex(0.0, -(m.c * m.c) * (k * k) / fast);
    }
    return d;
}

AmplificationFactor amplification_factor(const DispersionResult& d, double dt) {
    if (!std::isfinite(dt) || dt <= 0.0) {
        throw InvalidParameterError("dt must be finite and > 0");
    }
    const Complex i(0.0, 1.0);
    return {std::exp(-i * d.omega1 * dt), std::exp(-i * d.omega2 * dt), dt};
}

PhaseShift phase_shift(const DispersionResult& d, double dt) {
    if (!std::isfinite(dt) || dt <= 0.0) {
        throw InvalidParameterError("dt must be finite and > 0");
    }
    if (d.regime != Regime::Propagating) {
        throw DiffusiveRegimeError("phase shift undefined at and above cutoff");
    }
    const double beta = d.omega1.real() * dt;  // Re(omega1) = k c f
    return {beta, -beta};
}

double phase_speed(const MediumParams& m, const DispersionResult& d) {
    if (d.k == 0.0) throw ZeroWavenumberError("phase speed undefined at k = 0");
    if (d.regime != Regime::Propagating) {
        throw DiffusiveRegimeError("phase speed undefined at and above cutoff");
    }
    return m.c * d.f.real();
}

}  // namespace lossywave
