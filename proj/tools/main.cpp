#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lossywave/commands.hpp"
#include "lossywave/errors.hpp"

namespace {

// Output is buffered and written only after the command succeeds, so a
// failed run (config error, stability gate, divergence) leaves no file.
int write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return std::cout ? 0 : 1;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file '" << out_path << "'\n";
        return 1;
    }
    out << text;
    return out ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1D acoustic waves in a viscous medium: exact dispersion "
                 "relation, analytic spectral solver, explicit FDTD solver and "
                 "scheme spectral analysis"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string engine_name;

    CLI::App* dispersion = app.add_subcommand(
        "dispersion", "Sweep the dispersion relation over a wavenumber range");
    CLI::App* simulate = app.add_subcommand(
        "simulate", "Evolve an initial-value problem and emit CSV snapshots");
    CLI::App* gsa = app.add_subcommand(
        "gsa", "Emit the scheme-vs-exact amplification error map");
    for (CLI::App* sub : {dispersion, simulate, gsa}) {
        sub->add_option("--config", config_path, "Path to the JSON run config")
            ->required();
        sub->add_option("--out", out_path, "Output CSV path (default: stdout)");
    }
    simulate->add_option("--engine", engine_name, "Engine: exact, fdtd or both")
        ->required()
        ->check(CLI::IsMember({"exact", "fdtd", "both"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const lossywave::RunConfig cfg = lossywave::load_run_config(config_path);
        std::ostringstream buf;
        if (dispersion->parsed()) {
            lossywave::run_dispersion(cfg, buf);
        } else if (gsa->parsed()) {
            lossywave::run_gsa(cfg, buf);
        } else {
            const lossywave::Engine engine =
                engine_name == "exact" ? lossywave::Engine::Exact
                : engine_name == "fdtd" ? lossywave::Engine::Fdtd
                                        : lossywave::Engine::Both;
            lossywave::run_simulate(cfg, engine, buf);
        }
        return write_output(out_path, buf.str());
    } catch (const lossywave::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const lossywave::UnstableSchemeError& e) {
        std::cerr << "stability gate: " << e.what() << "\n";
        return 3;
    } catch (const lossywave::DivergedError& e) {
        std::cerr << "diverged: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
