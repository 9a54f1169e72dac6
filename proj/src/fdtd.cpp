#include "lossywave/fdtd.hpp"

#include <cmath>
#include <utility>

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

void check_certificate(const GridSpec& spec) {
    if (!spec.certificate.has_value()) {
        throw MissingCertificateError("no stability certificate attached to grid spec");
    }
}

void check_samples(std::span<const double> v, std::size_t n, const char* name) {
    if (v.size() != n) throw SizeError(std::string(name) + ": wrong sample count");
    for (double x : v) {
        if (!std::isfinite(x)) {
            throw InvalidParameterError(std::string(name) + ": non-finite sample");
        }
    }
}

// Periodic second difference v_{j+1} - 2 v_j + v_{j-1}.
double delta2(std::span<const double> v, std::size_t j) {
    const std::size_t n = v.size();
    const std::size_t prev = (j == 0) ? n - 1 : j - 1;
    const std::size_t next = (j + 1 == n) ? 0 : j + 1;
    return v[next] - 2.0 * v[j] + v[prev];
}

}  // namespace

GridState bootstrap(std::span<const double> initial_p,
                    std::span<const double> initial_q,
                    const GridSpec& spec, const MediumParams& m) {
    check_spec(spec);
    check_certificate(spec);
    const std::size_t n = static_cast<std::size_t>(spec.n_points);
    check_samples(initial_p, n, "initial_p");
    check_samples(initial_q, n, "initial_q");

    const double nu = effective_diffusivity(m);
    const double dx2 = spec.dx() * spec.dx();
    const double dt = spec.dt;

    GridState state;
    state.spec = spec;
    state.p_prev.assign(initial_p.begin(), initial_p.end());
    state.p_curr.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double lap_p = delta2(initial_p, j) / dx2;
        const double lap_q = delta2(initial_q, j) / dx2;
        state.p_curr[j] = initial_p[j] + dt * initial_q[j] +
                          0.5 * dt * dt * (m.c * m.c * lap_p + nu * lap_q);
    }
    state.step_index = 1;
    return state;
}

GridState step(const GridState& s, const MediumParams& m) {
    check_spec(s.spec);
    check_certificate(s.spec);
    const std::size_t n = static_cast<std::size_t>(s.spec.n_points);
    if (s.p_prev.size() != n || s.p_curr.size() != n) {
        throw SizeError("grid state does not match its spec");
    }

    const double nu = effective_diffusivity(m);
    const double dx = s.spec.dx();
    const double wave = (m.c * s.spec.dt / dx) * (m.c * s.spec.dt / dx);
    const double visc = nu * s.spec.dt / (dx * dx);

    GridState next;
    next.spec = s.spec;
    next.step_index = s.step_index + 1;
    next.p_prev = s.p_curr;
    next.p_curr.resize(n);

    bool finite = true;
    for (std::size_t j = 0; j < n; ++j) {
        const double d2_curr = delta2(s.p_curr, j);
        const double d2_prev = delta2(s.p_prev, j);
        const double v = 2.0 * s.p_curr[j] - s.p_prev[j] + wave * d2_curr +
                         visc * (d2_curr - d2_prev);
        next.p_curr[j] = v;
        finite = finite && std::isfinite(v);
    }
    if (!finite) {
        throw DivergedError("non-finite samples at step " + std::to_string(next.step_index));
    }
    return next;
}

std::vector<Snapshot> run(std::span<const double> initial_p,
                          std::span<const double> initial_q,
                          const GridSpec& spec, const MediumParams& m,
                          double t_final, long snapshot_every) {
    check_spec(spec);
    if (!std::isfinite(t_final) || t_final < 0.0) {
        throw InvalidParameterError("t_final must be finite and >= 0");
    }
    if (snapshot_every < 1) {
        throw InvalidParameterError("snapshot_every must be >= 1");
    }
    if (t_final / spec.dt > 1e8) {
        throw InvalidParameterError("t_final / dt exceeds the runaway guard (1e8 steps)");
    }

    const long n_steps = static_cast<long>(std::floor(t_final / spec.dt + 1e-9));

    std::vector<Snapshot> snapshots;
    snapshots.push_back({0.0, std::vector<double>(initial_p.begin(), initial_p.end())});
    if (n_steps == 0) return snapshots;

    GridState state = bootstrap(initial_p, initial_q, spec, m);
    if (state.step_index % snapshot_every == 0 || state.step_index == n_steps) {
        snapshots.push_back({state.step_index * spec.dt, state.p_curr});
    }
    while (state.step_index < n_steps) {
        state = step(state, m);
        if (state.step_index % snapshot_every == 0 || state.step_index == n_steps) {
            snapshots.push_back({state.step_index * spec.dt, state.p_curr});
        }
    }
    return snapshots;
}

}  // namespace lossywave
