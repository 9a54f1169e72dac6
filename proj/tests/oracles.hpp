// Independent reference computations used only by tests. Everything here
// deliberately avoids the closed-form code paths of the library: roots come
// from a simultaneous (Durand-Kerner) iteration, modal evolution from a
// step-doubling RK4 integrator, linear fits from Cramer's rule.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <utility>

namespace oracles {

using Complex = std::complex<double>;

// Roots of the monic quadratic z^2 + b z + c via Durand-Kerner iteration.
inline std::array<Complex, 2> quadratic_roots(Complex b, Complex c) {
    const auto poly = [&](Complex z) { return (z + b) * z + c; };
    const double bound = 1.0 + std::max(std::abs(b), std::abs(c));
    Complex z0 = Complex(0.4, 0.9) * bound;
    Complex z1 = Complex(0.4, 0.9) * Complex(0.4, 0.9) * bound;
    for (int iter = 0; iter < 500; ++iter) {
        const Complex d0 = poly(z0) / (z0 - z1);
        const Complex d1 = poly(z1) / (z1 - z0);
        z0 -= d0;
        z1 -= d1;
        if (std::abs(d0) + std::abs(d1) < 1e-16 * (1.0 + std::abs(z0) + std::abs(z1))) {
            break;
        }
    }
    return {z0, z1};
}

// Roots of omega^2 + i nu k^2 omega - c^2 k^2 = 0.
inline std::array<Complex, 2> dispersion_roots(double nu, double c, double k) {
    return quadratic_roots(Complex(0.0, nu * k * k), Complex(-c * c * k * k, 0.0));
}

// Smallest distance from z to either oracle root.
inline double root_distance(const std::array<Complex, 2>& roots, Complex z) {
    return std::min(std::abs(z - roots[0]), std::abs(z - roots[1]));
}

struct ModalState {
    Complex p;
    Complex q;
};

// Classical RK4 with n fixed steps on p'' + damp p' + stiff p = 0.
inline ModalState rk4_modal(double damp, double stiff, ModalState y, double t, long n) {
    const double h = t / static_cast<double>(n);
    const auto rhs = [&](const ModalState& s) {
        return ModalState{s.q, -damp * s.q - stiff * s.p};
    };
    for (long i = 0; i < n; ++i) {
        const ModalState k1 = rhs(y);
        const ModalState k2 = rhs({y.p + 0.5 * h * k1.p, y.q + 0.5 * h * k1.q});
        const ModalState k3 = rhs({y.p + 0.5 * h * k2.p, y.q + 0.5 * h * k2.q});
        const ModalState k4 = rhs({y.p + h * k3.p, y.q + h * k3.q});
        y.p += h / 6.0 * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p);
        y.q += h / 6.0 * (k1.q + 2.0 * k2.q + 2.0 * k3.q + k4.q);
    }
    return y;
}

// Step-doubling driver: doubles the step count until two consecutive
// integrations agree to tol (absolute, on p).
inline ModalState integrate_modal_ode(double damp, double stiff, Complex p0, Complex q0,
                                      double t, double tol) {
    if (t == 0.0) return {p0, q0};
    const double rate_scale = std::sqrt(std::max(stiff, 1.0)) + damp;
    long n = std::max<long>(64, static_cast<long>(std::ceil(t * rate_scale)));
    ModalState prev = rk4_modal(damp, stiff, {p0, q0}, t, n);
    for (int iter = 0; iter < 22; ++iter) {
        n *= 2;
        const ModalState cur = rk4_modal(damp, stiff, {p0, q0}, t, n);
        if (std::abs(cur.p - prev.p) <= tol &&
            std::abs(cur.q - prev.q) <= tol * rate_scale) {
            return cur;
        }
        prev = cur;
    }
    return prev;
}

// Cramer solve of [[a11 a12],[a21 a22]] x = (r1, r2).
inline std::pair<Complex, Complex> solve_2x2(Complex a11, Complex a12, Complex a21,
                                             Complex a22, Complex r1, Complex r2) {
    const Complex det = a11 * a22 - a12 * a21;
    return {(r1 * a22 - a12 * r2) / det, (a11 * r2 - r1 * a21) / det};
}

// Per-step phase advance of the lossless leapfrog scheme.
inline double leapfrog_phase(double cfl, double theta) {
    return 2.0 * std::asin(cfl * std::sin(0.5 * theta));
}

}  // namespace oracles
