// End-to-end checks of the command-line tool: exit codes, output files,
// byte-determinism. Invoked as: test_cli <cli-binary> <config-dir>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void record(const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s %s%s%s\n", ok ? "[ok]  " : "[FAIL]", name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

int run_command(const std::string& cmd) {
    const int rc = std::system(cmd.c_str());
    if (rc == -1) return -1;
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: test_cli <cli-binary> <config-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const fs::path configs = argv[2];
    const fs::path tmp = fs::temp_directory_path() / "lossywave_cli_test";
    fs::remove_all(tmp);
    fs::create_directories(tmp);

    const auto out_path = [&](const std::string& name) { return (tmp / name).string(); };
    const std::string quiet = " > /dev/null 2>&1";

    // each subcommand runs twice on its shipped config; outputs must be
    // byte-identical and non-empty
    struct Case {
        std::string name;
        std::string args;
    };
    const Case cases[] = {
        {"dispersion", "dispersion --config " + (configs / "dispersion_sweep.json").string()},
        {"simulate_exact", "simulate --engine exact --config " +
                               (configs / "gaussian_pulse.json").string()},
        {"simulate_fdtd", "simulate --engine fdtd --config " +
                              (configs / "gaussian_pulse.json").string()},
        {"simulate_both", "simulate --engine both --config " +
                              (configs / "single_mode_diffusive.json").string()},
        {"gsa", "gsa --config " + (configs / "gsa_map.json").string()},
    };
    for (const Case& c : cases) {
        const std::string out1 = out_path(c.name + "_1.csv");
        const std::string out2 = out_path(c.name + "_2.csv");
        const int rc1 = run_command(cli + " " + c.args + " --out " + out1 + quiet);
        const int rc2 = run_command(cli + " " + c.args + " --out " + out2 + quiet);
        record(c.name + " exits 0", rc1 == 0 && rc2 == 0,
               "rc1=" + std::to_string(rc1) + " rc2=" + std::to_string(rc2));
        const std::string a = slurp(out1);
        const std::string b = slurp(out2);
        record(c.name + " output non-empty", !a.empty());
        record(c.name + " byte-identical reruns", a == b);
    }

    // stdout and --out carry the same bytes
    {
        const std::string args =
            "dispersion --config " + (configs / "dispersion_sweep.json").string();
        const std::string via_stdout = out_path("stdout.csv");
        run_command(cli + " " + args + " > " + via_stdout + " 2> /dev/null");
        record("stdout matches --out", slurp(via_stdout) == slurp(out_path("dispersion_1.csv")));
    }

    // config error: unknown key, exit 2, no output file
    {
        const fs::path bad = tmp / "bad.json";
        write_file(bad, R"({"medium": {"lambda": 0, "mu": 0.5, "rho_bar": 1, "c": 1},
                           "time": {"dt": 0.01}, "sweep": {"k_min": 0, "k_max": 1},
                           "turbo": true})");
        const std::string out = out_path("bad.csv");
        const int rc = run_command(cli + " dispersion --config " + bad.string() +
                                   " --out " + out + quiet);
        record("unknown key exits 2", rc == 2, "rc=" + std::to_string(rc));
        record("no output file on config error", !fs::exists(out));
    }

    // missing required section: exit 2
    {
        const fs::path bad = tmp / "missing.json";
        write_file(bad, R"({"medium": {"lambda": 0, "mu": 0.5, "rho_bar": 1, "c": 1}})");
        const int rc = run_command(cli + " dispersion --config " + bad.string() + quiet);
        record("missing section exits 2", rc == 2, "rc=" + std::to_string(rc));
    }

    // stability gate: unstable dt, exit 3, no output file; exact engine unaffected
    {
        const fs::path unstable = tmp / "unstable.json";
        write_file(unstable, R"({
            "medium": {"lambda": 0.0, "mu": 0.0, "rho_bar": 1.0, "c": 1.0},
            "grid": {"length": 6.283185307179586, "n_points": 64},
            "time": {"dt": 0.12, "t_final": 1.0},
            "ic": {"kind": "single_mode", "mode_index": 3, "amplitude": 1.0, "phase": 0.0}
        })");  // dx ~ 0.0982, so cfl ~ 1.22
        const std::string out = out_path("unstable.csv");
        const int rc = run_command(cli + " simulate --engine fdtd --config " +
                                   unstable.string() + " --out " + out + quiet);
        record("unstable fdtd exits 3", rc == 3, "rc=" + std::to_string(rc));
        record("no output file on stability gate", !fs::exists(out));
        const int rc_exact = run_command(cli + " simulate --engine exact --config " +
                                         unstable.string() + " --out " +
                                         out_path("unstable_exact.csv") + quiet);
        record("exact engine has no stability gate", rc_exact == 0,
               "rc=" + std::to_string(rc_exact));
    }

    // divergence: amplitude at the double range limit overflows, exit 4
    {
        const fs::path huge = tmp / "huge.json";
        write_file(huge, R"({
            "medium": {"lambda": 0.0, "mu": 0.0, "rho_bar": 1.0, "c": 1.0},
            "grid": {"length": 6.283185307179586, "n_points": 64},
            "time": {"dt": 0.04, "t_final": 1.0},
            "ic": {"kind": "gaussian", "amplitude": 1e308, "center": 3.14159, "width": 0.5}
        })");
        const std::string out = out_path("huge.csv");
        const int rc = run_command(cli + " simulate --engine fdtd --config " + huge.string() +
                                   " --out " + out + quiet);
        record("overflowing run exits 4", rc == 4, "rc=" + std::to_string(rc));
        record("no output file on divergence", !fs::exists(out));
    }

    // runaway guard: absurd step budget is a config error for any engine
    {
        const fs::path runaway = tmp / "runaway.json";
        write_file(runaway, R"({
            "medium": {"lambda": 0.0, "mu": 0.0, "rho_bar": 1.0, "c": 1.0},
            "grid": {"length": 6.283185307179586, "n_points": 64},
            "time": {"dt": 1e-12, "t_final": 1.0},
            "ic": {"kind": "single_mode", "mode_index": 1, "amplitude": 1.0, "phase": 0.0}
        })");
        const int rc_f = run_command(cli + " simulate --engine fdtd --config " +
                                     runaway.string() + quiet);
        const int rc_e = run_command(cli + " simulate --engine exact --config " +
                                     runaway.string() + quiet);
        record("runaway guard exits 2 (fdtd)", rc_f == 2, "rc=" + std::to_string(rc_f));
        record("runaway guard exits 2 (exact)", rc_e == 2, "rc=" + std::to_string(rc_e));
    }

    // usage errors
    {
        const int rc1 = run_command(cli + " dispersion" + quiet);  // missing --config
        const int rc2 = run_command(cli + quiet);                  // missing subcommand
        const int rc3 = run_command(cli + " simulate --config x.json --engine warp" + quiet);
        const int rc4 = run_command(cli + " --help" + quiet);
        record("missing flag exits 2", rc1 == 2, "rc=" + std::to_string(rc1));
        record("missing subcommand exits 2", rc2 == 2, "rc=" + std::to_string(rc2));
        record("bad engine value exits 2", rc3 == 2, "rc=" + std::to_string(rc3));
        record("help exits 0", rc4 == 0, "rc=" + std::to_string(rc4));
    }

    fs::remove_all(tmp);
    if (failures > 0) {
        std::printf("%d check(s) failed\n", failures);
        return 1;
    }
    std::printf("all CLI checks passed\n");
    return 0;
}
