#include "lossywave/gsa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "lossywave/errors.hpp"

namespace lossywave {

namespace {

void check_spec(const GridSpec& spec) {
    if (!std::isfinite(spec.length) || spec.length <= 0.0) {
        throw InvalidParameterError("grid length must be finite and > 0");
    }
    if (spec.n_points < 8 || spec.n_points % 2 != 0) {
        throw SizeError("grid must have an even number of points, >= 8");
    }
    if (!std::isfinite(spec.dt) || spec.dt <= 0.0) {
        throw InvalidParameterError("dt must be finite and > 0");
    }
}

double max_abs(const std::array<Complex, 2>& pair) {
    return std::max(std::abs(pair[0]), std::abs(pair[1]));
}

}  // namespace

std::array<Complex, 2> numerical_amplification(double theta, double cfl, double visc) {
    if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi) {
        throw InvalidParameterError("theta must lie in [0, pi]");
    }
    if (!std::isfinite(cfl) || cfl <= 0.0) {
        throw InvalidParameterError("cfl must be finite and > 0");
    }
    if (!std::isfinite(visc) || visc < 0.0) {
        throw InvalidParameterError("visc must be finite and >= 0");
    }

    // Substituting p^n_j = G^n e^{i theta j} into the update
    //   p^{n+1} = 2 p^n - p^{n-1} + cfl^2 d2 p^n + visc (d2 p^n - d2 p^{n-1})
    // turns d2 into its Fourier symbol D = 2 cos(theta) - 2 and, after
    // dividing by G^{n-1},
    //   G^2 = 2 G - 1 + cfl^2 D G + visc D (G - 1),
    // i.e. the monic quadratic
    //   G^2 - (2 + D (cfl^2 + visc)) G + (1 + D visc) = 0.
    const double sym = 2.0 * std::cos(theta) - 2.0;
    const double b = 2.0 + sym * (cfl * cfl + visc);
    const double c = 1.0 + sym * visc;

    double disc = b * b - 4.0 * c;
    // A discriminant within rounding noise of zero flips sign spuriously
    // near double roots (theta -> 0, or theta = pi at unit CFL); treat it
    // as the coincident-root case so marginal schemes report |G| = 1.
    const double noise =
        16.0 * std::numeric_limits<double>::epsilon() * (b * b + 4.0 * std::abs(c));
    if (disc <= noise) {
        const double half_im = 0.5 * std::sqrt(std::max(-disc, 0.0));
        return {Complex(0.5 * b, half_im), Complex(0.5 * b, -half_im)};
    }

    const double root = std::sqrt(disc);
    const double q = 0.5 * (b + std::copysign(root, b));
    const double g_big = q;
    const double g_small = c / q;
    if (std::abs(g_big) >= std::abs(g_small)) {
        return {Complex(g_big, 0.0), Complex(g_small, 0.0)};
    }
    return {Complex(g_small, 0.0), Complex(g_big, 0.0)};
}

StabilityCertificate stability_check(const GridSpec& spec, const MediumParams& m) {
    check_spec(spec);
    const double nu = effective_diffusivity(m);
    const double dx = spec.dx();
    const double cfl = m.c * spec.dt / dx;
    const double visc = nu * spec.dt / (dx * dx);

    const auto gain = [&](double theta) {
        return max_abs(numerical_amplification(theta, cfl, visc));
    };

    constexpr int n_intervals = 2048;
    double best_theta = 0.0;
    double best_gain = gain(0.0);
    for (int i = 1; i <= n_intervals; ++i) {
        const double theta = std::numbers::pi * i / n_intervals;
        const double g = gain(theta);
        if (g > best_gain) {
            best_gain = g;
            best_theta = theta;
        }
    }

    // Golden-section refinement on the bracketing interval; the gain curve
    // is smooth, so this locates the maximum to ~1e-10.
    const double h = std::numbers::pi / n_intervals;
    double lo = std::max(0.0, best_theta - h);
    double hi = std::min(std::numbers::pi, best_theta + h);
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = gain(x1);
    double f2 = gain(x2);
    while (hi - lo > 1e-11) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = gain(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = gain(x1);
        }
    }
    const double refined_theta = 0.5 * (lo + hi);
    const double refined_gain = gain(refined_theta);
    if (refined_gain > best_gain) {
        best_gain = refined_gain;
        best_theta = refined_theta;
    }

    return {best_gain <= 1.0 + 1e-12, best_gain, best_theta};
}

SchemeSpectrum scheme_spectrum(const GridSpec& spec, const MediumParams& m, int n_theta) {
    check_spec(spec);
    if (n_theta < 2) throw InvalidParameterError("need at least two theta samples");
    const double dx = spec.dx();
    const double nu = effective_diffusivity(m);

    SchemeSpectrum s;
    s.cfl = m.c * spec.dt / dx;
    s.visc = nu * spec.dt / (dx * dx);
    s.theta.reserve(static_cast<std::size_t>(n_theta));
    s.g_num.reserve(static_cast<std::size_t>(n_theta));
    s.g_exact.reserve(static_cast<std::size_t>(n_theta));
    for (int i = 0; i < n_theta; ++i) {
        const double theta = std::numbers::pi * i / (n_theta - 1);
        const DispersionResult d = solve_dispersion(m, theta / dx);
        const AmplificationFactor g = amplification_factor(d, spec.dt);
        s.theta.push_back(theta);
        s.g_num.push_back(numerical_amplification(theta, s.cfl, s.visc));
        s.g_exact.push_back({g.g1, g.g2});
    }
    return s;
}

DispersionErrorRecord dispersion_error_at(const GridSpec& spec, const MediumParams& m,
                                          double theta) {
    check_spec(spec);
    const double dx = spec.dx();
    const double nu = effective_diffusivity(m);
    const double cfl = m.c * spec.dt / dx;
    const double visc = nu * spec.dt / (dx * dx);

    const std::array<Complex, 2> g_num = numerical_amplification(theta, cfl, visc);
    const DispersionResult d = solve_dispersion(m, theta / dx);
    const AmplificationFactor g = amplification_factor(d, spec.dt);

    DispersionErrorRecord rec;
    rec.theta = theta;
    rec.abs_gnum_max = max_abs(g_num);
    rec.abs_gexact_max = std::max(std::abs(g.g1), std::abs(g.g2));
    rec.amplitude_error = rec.abs_gnum_max - rec.abs_gexact_max;
    if (d.regime == Regime::Propagating) {
        // Positive-phase numerical root against the positive-phase exact
        // branch (g2 = exp(-i omega2 dt) carries arg +k c f dt).
        const Complex num_pos =
            std::arg(g_num[0]) >= std::arg(g_num[1]) ? g_num[0] : g_num[1];
        rec.phase_error = std::arg(num_pos) - std::arg(g.g2);
    }
    return rec;
}

std::vector<DispersionErrorRecord> dispersion_error_map(const GridSpec& spec,
                                                        const MediumParams& m,
                                                        int n_theta) {
    check_spec(spec);
    if (n_theta < 2) throw InvalidParameterError("need at least two theta samples");
    std::vector<DispersionErrorRecord> records;
    records.reserve(static_cast<std::size_t>(n_theta));
    for (int i = 0; i < n_theta; ++i) {
        const double theta = std::numbers::pi * i / (n_theta - 1);
        records.push_back(dispersion_error_at(spec, m, theta));
    }
    return records;
}

}  // namespace lossywave
