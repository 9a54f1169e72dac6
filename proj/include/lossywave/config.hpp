#pragma once

#include <optional>
#include <string>
#include <variant>

#include "lossywave/medium.hpp"

namespace lossywave {

struct GridConfig {
    double length;
    int n_points;
};

struct TimeConfig {
    double dt;
    std::optional<double> t_final;
    long snapshot_every = 1;
};

struct GaussianIc {
    double amplitude;
    double center;
    double width;
};

struct SingleModeIc {
    int mode_index;
    double amplitude;
    double phase;
};

/// Two-column table of p and q samples, one row per grid point.
struct FileIc {
    std::string path;
};

using IcConfig = std::variant<GaussianIc, SingleModeIc, FileIc>;

struct SweepConfig {
    std::optional<double> k_min;
    std::optional<double> k_max;
    long n_samples = 1000;
};

/// Parsed run configuration. Sections are optional at parse time; each
/// command validates that the sections it needs are present. Physical
/// parameters have no defaults, only output cadence does.
struct RunConfig {
    std::optional<MediumParams> medium;
    std::optional<GridConfig> grid;
    std::optional<TimeConfig> time;
    std::optional<IcConfig> ic;
    std::optional<SweepConfig> sweep;
};

/// Strict JSON parsing: unknown keys anywhere are rejected, all numbers must
/// be finite, enumerated kinds are validated. Throws ConfigError with a
/// field-path (or line) diagnostic.
RunConfig parse_run_config(const std::string& text, const std::string& origin);

RunConfig load_run_config(const std::string& path);

}  // namespace lossywave
