#pragma once

#include <iosfwd>
#include <string>

#include "lossywave/config.hpp"

namespace lossywave {

enum class Engine { Exact, Fdtd, Both };

/// Sweeps solve_dispersion over [k_min, k_max] and emits one CSV row per
/// wavenumber (roots, regime factor, regime, gain moduli, phase shift).
/// A leading comment line records the cutoff wavenumber.
void run_dispersion(const RunConfig& cfg, std::ostream& out);

/// Evolves the configured initial-value problem and emits long-format CSV
/// snapshots. With Engine::Both, each row carries both engines plus the
/// pointwise error, and one summary row per snapshot time carries the
/// Linf / L2 errors. FDTD runs are gated on the stability certificate
/// (UnstableSchemeError when it fails).
void run_simulate(const RunConfig& cfg, Engine engine, std::ostream& out);

/// Emits the scheme-vs-exact dispersion error map, one row per theta, with
/// the stability certificate on the first comment line.
void run_gsa(const RunConfig& cfg, std::ostream& out);

/// printf-style %.17g with negative zero canonicalized; shared by all CSV
/// emitters so output is byte-reproducible.
std::string format_value(double v);

}  // namespace lossywave
