#include "lossywave/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <vector>

#include "lossywave/dispersion.hpp"
#include "lossywave/errors.hpp"
#include "lossywave/fdtd.hpp"
#include "lossywave/gsa.hpp"
#include "lossywave/modes.hpp"

namespace lossywave {

std::string format_value(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
}

namespace {

constexpr int kDefaultThetaSamples = 512;

const MediumParams& need_medium(const RunConfig& cfg) {
    if (!cfg.medium) throw ConfigError("missing required section 'medium'");
    return *cfg.medium;
}

const GridConfig& need_grid(const RunConfig& cfg) {
    if (!cfg.grid) throw ConfigError("missing required section 'grid'");
    return *cfg.grid;
}

const TimeConfig& need_time(const RunConfig& cfg) {
    if (!cfg.time) throw ConfigError("missing required section 'time'");
    return *cfg.time;
}

struct InitialFields {
    std::vector<double> p;
    std::vector<double> q;
};

InitialFields load_ic_file(const std::string& path, int n_points) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open ic file");
    InitialFields fields;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream row(line);
        double p = 0.0;
        double q = 0.0;
        if (!(row >> p >> q) || !std::isfinite(p) || !std::isfinite(q)) {
            throw ConfigError(path + ": line " + std::to_string(line_no) +
                              ": expected two finite numbers");
        }
        fields.p.push_back(p);
        fields.q.push_back(q);
    }
    if (static_cast<int>(fields.p.size()) != n_points) {
        throw ConfigError(path + ": expected " + std::to_string(n_points) +
                          " rows, got " + std::to_string(fields.p.size()));
    }
    return fields;
}

InitialFields build_initial_fields(const RunConfig& cfg) {
    const GridConfig& grid = need_grid(cfg);
    if (!cfg.ic) throw ConfigError("missing required section 'ic'");
    const int n = grid.n_points;
    const double dx = grid.length / n;

    if (const auto* g = std::get_if<GaussianIc>(&*cfg.ic)) {
        InitialFields fields{std::vector<double>(n), std::vector<double>(n, 0.0)};
        for (int j = 0; j < n; ++j) {
            const double x = j * dx;
            const double u = (x - g->center) / g->width;
            fields.p[static_cast<std::size_t>(j)] = g->amplitude * std::exp(-0.5 * u * u);
        }
        return fields;
    }
    if (const auto* sm = std::get_if<SingleModeIc>(&*cfg.ic)) {
        if (std::abs(sm->mode_index) > n / 2) {
            throw ConfigError("'ic.mode_index' is not resolvable on this grid");
        }
        const double k = 2.0 * std::numbers::pi * sm->mode_index / grid.length;
        InitialFields fields{std::vector<double>(n), std::vector<double>(n, 0.0)};
        for (int j = 0; j < n; ++j) {
            fields.p[static_cast<std::size_t>(j)] =
                sm->amplitude * std::cos(k * j * dx + sm->phase);
        }
        return fields;
    }
    return load_ic_file(std::get<FileIc>(*cfg.ic).path, n);
}

// Step indices that get snapshots; identical to the cadence fdtd::run uses.
std::vector<long> snapshot_steps(double t_final, double dt, long every) {
    if (t_final / dt > 1e8) {
        throw ConfigError("time.t_final / time.dt exceeds the runaway guard (1e8 steps)");
    }
    const long n_steps = static_cast<long>(std::floor(t_final / dt + 1e-9));
    std::vector<long> steps{0};
    for (long n = 1; n <= n_steps; ++n) {
        if (n % every == 0 || n == n_steps) steps.push_back(n);
    }
    return steps;
}

std::string certificate_line(const StabilityCertificate& cert) {
    return "# certificate: stable=" + std::string(cert.stable ? "1" : "0") +
           " max_gain=" + format_value(cert.max_gain) +
           " worst_theta=" + format_value(cert.worst_theta) + "\n";
}

}  // namespace

void run_dispersion(const RunConfig& cfg, std::ostream& out) {
    const MediumParams& m = need_medium(cfg);
    const TimeConfig& time = need_time(cfg);
    if (!cfg.sweep) throw ConfigError("missing required section 'sweep'");
    if (!cfg.sweep->k_min) throw ConfigError("missing required key 'sweep.k_min'");
    if (!cfg.sweep->k_max) throw ConfigError("missing required key 'sweep.k_max'");
    const double k_min = *cfg.sweep->k_min;
    const double k_max = *cfg.sweep->k_max;
    const long n = cfg.sweep->n_samples;

    std::string text;
    const bool lossless = (m.lambda + 2.0 * m.mu) == 0.0;
    text += "# k_c = " + (lossless ? std::string("inf")
                                   : format_value(cutoff_wavenumber(m))) + "\n";
    text += "k,re_omega1,im_omega1,re_omega2,im_omega2,re_f,im_f,regime,abs_g1,abs_g2,beta1\n";
    for (long i = 0; i < n; ++i) {
        const double k = k_min + (k_max - k_min) * static_cast<double>(i) /
                                     static_cast<double>(n - 1);
        const DispersionResult d = solve_dispersion(m, k);
        const AmplificationFactor g = amplification_factor(d, time.dt);
        text += format_value(k);
        text += ',' + format_value(d.omega1.real()) + ',' + format_value(d.omega1.imag());
        text += ',' + format_value(d.omega2.real()) + ',' + format_value(d.omega2.imag());
        text += ',' + format_value(d.f.real()) + ',' + format_value(d.f.imag());
        text += ',';
        text += to_string(d.regime);
        text += ',' + format_value(std::abs(g.g1)) + ',' + format_value(std::abs(g.g2));
        text += ',';
        if (d.regime == Regime::Propagating) {
            text += format_value(phase_shift(d, time.dt).beta1);
        }
        text += '\n';
    }
    out << text;
}

void run_simulate(const RunConfig& cfg, Engine engine, std::ostream& out) {
    const MediumParams& m = need_medium(cfg);
    const GridConfig& grid = need_grid(cfg);
    const TimeConfig& time = need_time(cfg);
    if (!time.t_final) throw ConfigError("missing required key 'time.t_final'");
    if (*time.t_final / time.dt > 1e8) {
        throw ConfigError("time.t_final / time.dt exceeds the runaway guard (1e8 steps)");
    }
    const InitialFields fields = build_initial_fields(cfg);
    const double dx = grid.length / grid.n_points;

    GridSpec spec{grid.length, grid.n_points, time.dt, std::nullopt};
    std::string text;

    const bool wants_fdtd = engine != Engine::Exact;
    const bool wants_exact = engine != Engine::Fdtd;
    if (wants_fdtd) {
        const StabilityCertificate cert = stability_check(spec, m);
        if (!cert.stable) {
            throw UnstableSchemeError(
                "stability check failed: max_gain=" + format_value(cert.max_gain) +
                    " at theta=" + format_value(cert.worst_theta),
                cert.max_gain, cert.worst_theta);
        }
        spec.certificate = cert;
        text += certificate_line(cert);
    }

    std::vector<Snapshot> fdtd_snaps;
    if (wants_fdtd) {
        fdtd_snaps = run(fields.p, fields.q, spec, m, *time.t_final, time.snapshot_every);
    }
    std::vector<double> times;
    if (wants_fdtd) {
        for (const Snapshot& s : fdtd_snaps) times.push_back(s.t);
    } else {
        for (long n : snapshot_steps(*time.t_final, time.dt, time.snapshot_every)) {
            times.push_back(n * time.dt);
        }
    }

    if (engine == Engine::Both) {
        text += "t,x,p_exact,p_fdtd,abs_error,linf_error,l2_error\n";
        for (std::size_t i = 0; i < times.size(); ++i) {
            const double t = times[i];
            const std::vector<double> exact =
                evolve_field(fields.p, fields.q, m, grid.length, t);
            const std::vector<double>& fdtd = fdtd_snaps[i].p;
            double linf = 0.0;
            double sum_sq = 0.0;
            for (int j = 0; j < grid.n_points; ++j) {
                const double pe = exact[static_cast<std::size_t>(j)];
                const double pf = fdtd[static_cast<std::size_t>(j)];
                const double err = std::abs(pe - pf);
                linf = std::max(linf, err);
                sum_sq += (pe - pf) * (pe - pf);
                text += format_value(t) + ',' + format_value(j * dx) + ',' +
                        format_value(pe) + ',' + format_value(pf) + ',' +
                        format_value(err) + ",,\n";
            }
            const double l2 = std::sqrt(sum_sq / grid.n_points);
            text += format_value(t) + ",,,,," + format_value(linf) + ',' +
                    format_value(l2) + '\n';
        }
    } else {
        text += "t,x,p\n";
        for (std::size_t i = 0; i < times.size(); ++i) {
            const double t = times[i];
            const std::vector<double> field =
                wants_exact ? evolve_field(fields.p, fields.q, m, grid.length, t)
                            : fdtd_snaps[i].p;
            for (int j = 0; j < grid.n_points; ++j) {
                text += format_value(t) + ',' + format_value(j * dx) + ',' +
                        format_value(field[static_cast<std::size_t>(j)]) + '\n';
            }
        }
    }
    out << text;
}

void run_gsa(const RunConfig& cfg, std::ostream& out) {
    const MediumParams& m = need_medium(cfg);
    const GridConfig& grid = need_grid(cfg);
    const TimeConfig& time = need_time(cfg);
    const int n_theta = cfg.sweep ? static_cast<int>(cfg.sweep->n_samples)
                                  : kDefaultThetaSamples;

    const GridSpec spec{grid.length, grid.n_points, time.dt, std::nullopt};
    const StabilityCertificate cert = stability_check(spec, m);

    std::string text = certificate_line(cert);
    text += "theta,abs_gnum_max,abs_gexact_max,phase_err\n";
    for (const DispersionErrorRecord& rec : dispersion_error_map(spec, m, n_theta)) {
        text += format_value(rec.theta) + ',' + format_value(rec.abs_gnum_max) + ',' +
                format_value(rec.abs_gexact_max) + ',';
        if (rec.phase_error) text += format_value(*rec.phase_error);
        text += '\n';
    }
    out << text;
}

}  // namespace lossywave
