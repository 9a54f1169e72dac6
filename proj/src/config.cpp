#include "lossywave/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lossywave/errors.hpp"

namespace lossywave {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
    throw ConfigError(origin + ": " + what);
}

void require_object(const json& node, const std::string& origin, const std::string& path) {
    if (!node.is_object()) fail(origin, path + " must be an object");
}

// Strict schema walk: every present key must be known, every required key
// must be present.
void check_keys(const json& obj, const std::string& origin, const std::string& path,
                const std::set<std::string>& required,
                const std::set<std::string>& optional) {
    for (const auto& item : obj.items()) {
        if (!required.count(item.key()) && !optional.count(item.key())) {
            fail(origin, "unknown key '" + path + item.key() + "'");
        }
    }
    for (const auto& key : required) {
        if (!obj.contains(key)) {
            fail(origin, "missing required key '" + path + key + "'");
        }
    }
}

double get_double(const json& obj, const std::string& origin, const std::string& path,
                  const std::string& key) {
    const json& v = obj.at(key);
    if (!v.is_number()) fail(origin, "'" + path + key + "' must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(origin, "'" + path + key + "' must be finite");
    return x;
}

long get_integer(const json& obj, const std::string& origin, const std::string& path,
                 const std::string& key) {
    const json& v = obj.at(key);
    if (!v.is_number_integer()) fail(origin, "'" + path + key + "' must be an integer");
    return v.get<long>();
}

MediumParams parse_medium(const json& node, const std::string& origin) {
    require_object(node, origin, "medium");
    check_keys(node, origin, "medium.", {"lambda", "mu", "rho_bar", "c"}, {});
    MediumParams m{get_double(node, origin, "medium.", "lambda"),
                   get_double(node, origin, "medium.", "mu"),
                   get_double(node, origin, "medium.", "rho_bar"),
                   get_double(node, origin, "medium.", "c")};
    try {
        m.validate();
    } catch (const InvalidParameterError& e) {
        fail(origin, std::string("medium: ") + e.what());
    }
    return m;
}

GridConfig parse_grid(const json& node, const std::string& origin) {
    require_object(node, origin, "grid");
    check_keys(node, origin, "grid.", {"length", "n_points"}, {});
    GridConfig g{get_double(node, origin, "grid.", "length"),
                 static_cast<int>(get_integer(node, origin, "grid.", "n_points"))};
    if (g.length <= 0.0) fail(origin, "'grid.length' must be > 0");
    if (g.n_points < 8 || g.n_points % 2 != 0) {
        fail(origin, "'grid.n_points' must be even and >= 8");
    }
    return g;
}

TimeConfig parse_time(const json& node, const std::string& origin) {
    require_object(node, origin, "time");
    check_keys(node, origin, "time.", {"dt"}, {"t_final", "snapshot_every"});
    TimeConfig t;
    t.dt = get_double(node, origin, "time.", "dt");
    if (t.dt <= 0.0) fail(origin, "'time.dt' must be > 0");
    if (node.contains("t_final")) {
        t.t_final = get_double(node, origin, "time.", "t_final");
        if (*t.t_final < 0.0) fail(origin, "'time.t_final' must be >= 0");
    }
    if (node.contains("snapshot_every")) {
        t.snapshot_every = get_integer(node, origin, "time.", "snapshot_every");
        if (t.snapshot_every < 1) fail(origin, "'time.snapshot_every' must be >= 1");
    }
    return t;
}

IcConfig parse_ic(const json& node, const std::string& origin) {
    require_object(node, origin, "ic");
    if (!node.contains("kind") || !node.at("kind").is_string()) {
        fail(origin, "'ic.kind' must be one of gaussian|single_mode|file");
    }
    const std::string kind = node.at("kind").get<std::string>();
    if (kind == "gaussian") {
        check_keys(node, origin, "ic.", {"kind", "amplitude", "center", "width"}, {});
        GaussianIc ic{get_double(node, origin, "ic.", "amplitude"),
                      get_double(node, origin, "ic.", "center"),
                      get_double(node, origin, "ic.", "width")};
        if (ic.width <= 0.0) fail(origin, "'ic.width' must be > 0");
        return ic;
    }
    if (kind == "single_mode") {
        check_keys(node, origin, "ic.", {"kind", "mode_index", "amplitude", "phase"}, {});
        return SingleModeIc{
            static_cast<int>(get_integer(node, origin, "ic.", "mode_index")),
            get_double(node, origin, "ic.", "amplitude"),
            get_double(node, origin, "ic.", "phase")};
    }
    if (kind == "file") {
        check_keys(node, origin, "ic.", {"kind", "path"}, {});
        if (!node.at("path").is_string()) fail(origin, "'ic.path' must be a string");
        FileIc ic{node.at("path").get<std::string>()};
        if (ic.path.empty()) fail(origin, "'ic.path' must not be empty");
        return ic;
    }
    fail(origin, "unknown ic kind '" + kind + "'");
}

SweepConfig parse_sweep(const json& node, const std::string& origin) {
    require_object(node, origin, "sweep");
    check_keys(node, origin, "sweep.", {}, {"k_min", "k_max", "n_samples"});
    SweepConfig s;
    if (node.contains("k_min")) {
        s.k_min = get_double(node, origin, "sweep.", "k_min");
        if (*s.k_min < 0.0) fail(origin, "'sweep.k_min' must be >= 0");
    }
    if (node.contains("k_max")) s.k_max = get_double(node, origin, "sweep.", "k_max");
    if (s.k_min && s.k_max && *s.k_max < *s.k_min) {
        fail(origin, "'sweep.k_max' must be >= 'sweep.k_min'");
    }
    if (node.contains("n_samples")) {
        s.n_samples = get_integer(node, origin, "sweep.", "n_samples");
        if (s.n_samples < 2) fail(origin, "'sweep.n_samples' must be >= 2");
    }
    return s;
}

}  // namespace

RunConfig parse_run_config(const std::string& text, const std::string& origin) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        // Report the line of the failure rather than the raw byte offset.
        std::size_t line = 1;
        for (std::size_t i = 0; i < text.size() && i + 1 < e.byte; ++i) {
            if (text[i] == '\n') ++line;
        }
        fail(origin, "line " + std::to_string(line) + ": " + e.what());
    }
    require_object(root, origin, "top level");
    check_keys(root, origin, "", {}, {"medium", "grid", "time", "ic", "sweep"});

    RunConfig cfg;
    if (root.contains("medium")) cfg.medium = parse_medium(root.at("medium"), origin);
    if (root.contains("grid")) cfg.grid = parse_grid(root.at("grid"), origin);
    if (root.contains("time")) cfg.time = parse_time(root.at("time"), origin);
    if (root.contains("ic")) cfg.ic = parse_ic(root.at("ic"), origin);
    if (root.contains("sweep")) cfg.sweep = parse_sweep(root.at("sweep"), origin);
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError(path + ": cannot open config file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_run_config(buf.str(), path);
}

}  // namespace lossywave
