#include "lossywave/modes.hpp"

#include <cmath>

#include "lossywave/errors.hpp"
#include "lossywave/spectral.hpp"

namespace lossywave {

namespace {

// nu k^2 / 2 recovered from the roots; valid in every regime.
double decay_rate(const DispersionResult& d) {
    return -0.5 * (d.omega1.imag() + d.omega2.imag());
}

void check_time(double t) {
    if (!std::isfinite(t) || t < 0.0) {
        throw InvalidParameterError("time must be finite and >= 0");
    }
}

}  // namespace

ModeCoefficients fit_mode(const DispersionResult& d, Complex p0, Complex q0) {
    if (d.regime == Regime::Degenerate || d.omega1 == d.omega2) {
        // (a + b t) e^{-nu k^2 t / 2}: a = p(0), b = p'(0) + (nu k^2/2) p(0).
        return {p0, q0 + decay_rate(d) * p0, true};
    }
    const Complex i(0.0, 1.0);
    const Complex a = (q0 + i * d.omega2 * p0) / (i * (d.omega2 - d.omega1));
    return {a, p0 - a, false};
}

Complex evolve_mode(const ModeCoefficients& mc, const DispersionResult& d, double t) {
    check_time(t);
    if (mc.degenerate) {
        return (mc.a + mc.b * t) * std::exp(-decay_rate(d) * t);
    }
    const Complex i(0.0, 1.0);
    return mc.a * std::exp(-i * d.omega1 * t) + mc.b * std::exp(-i * d.omega2 * t);
}

Complex evolve_mode_rate(const ModeCoefficients& mc, const DispersionResult& d, double t) {
    check_time(t);
    if (mc.degenerate) {
        const double rate = decay_rate(d);
        return (mc.b - rate * (mc.a + mc.b * t)) * std::exp(-rate * t);
    }
    const Complex i(0.0, 1.0);
    return -i * (d.omega1 * mc.a * std::exp(-i * d.omega1 * t) +
                 d.omega2 * mc.b * std::exp(-i * d.omega2 * t));
}

std::vector<double> evolve_field(std::span<const double> initial_p,
                                 std::span<const double> initial_q,
                                 const MediumParams& m, double length, double t) {
    if (initial_p.size() != initial_q.size()) {
        throw SizeError("initial p and q must have the same length");
    }
    if (initial_p.size() < 2 || initial_p.size() % 2 != 0) {
        throw SizeError("sample count must be even and >= 2");
    }
    check_time(t);
    for (double v : initial_p) {
        if (!std::isfinite(v)) throw InvalidParameterError("non-finite initial p sample");
    }
    for (double v : initial_q) {
        if (!std::isfinite(v)) throw InvalidParameterError("non-finite initial q sample");
    }
    if (t == 0.0) return std::vector<double>(initial_p.begin(), initial_p.end());

    SpectralField p_hat = transform(initial_p, length);
    const SpectralField q_hat = transform(initial_q, length);

    const int n = p_hat.size();
    for (int i = 0; i < n; ++i) {
        const double k = std::abs(p_hat.wavenumber(p_hat.mode_of_index(i)));
        const DispersionResult d = solve_dispersion(m, k);
        const ModeCoefficients mc =
            fit_mode(d, p_hat.coeffs[static_cast<std::size_t>(i)],
                     q_hat.coeffs[static_cast<std::size_t>(i)]);
        p_hat.coeffs[static_cast<std::size_t>(i)] = evolve_mode(mc, d, t);
    }

    const std::vector<Complex> raw = synthesize(p_hat);
    double scale = 0.0;
    double residue = 0.0;
    for (const Complex& v : raw) {
        scale = std::max(scale, std::abs(v.real()));
        residue = std::max(residue, std::abs(v.imag()));
    }
    if (residue > 1e-10 * std::max(scale, 1e-30)) {
        throw std::runtime_error("imaginary residue exceeds realness tolerance");
    }

    std::vector<double> out(raw.size());
    for (std::size_t j = 0; j < raw.size(); ++j) out[j] = raw[j].real();
    return out;
}

}  // namespace lossywave
