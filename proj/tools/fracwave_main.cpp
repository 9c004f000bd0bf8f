#include "fracwave/config.hpp"

#include <CLI11.hpp>

#include <cstring>
#include <iostream>

using fracwave::RunConfig;

namespace {

// Flags shared by every subcommand; each writes straight into the config,
// so flag values override whatever a --config file preloaded.
void add_common(CLI::App* sub, RunConfig& cfg, std::string& config_path) {
    sub->add_option("--config", config_path, "key=value config file (flags override it)");
    sub->add_option("--s1", cfg.s1, "first fractional order, in (0,1]");
    sub->add_option("--s2", cfg.s2, "second fractional order, 0 < s2 < s1");
    sub->add_option("--p", cfg.p, "nonlinearity exponent, p > 2");
    sub->add_option("--dim", cfg.dim, "space dimension (1-3)");
    sub->add_option("--out", cfg.out_dir, "output directory");
    sub->add_option("--grid",
                    [&cfg](const std::vector<std::string>& vals) {
                        const std::string& s = vals.back();
                        const auto comma = s.find(',');
                        if (comma == std::string::npos) return false;
                        cfg.n = std::stoi(s.substr(0, comma));
                        cfg.box_length = std::stod(s.substr(comma + 1));
                        return true;
                    },
                    "grid as n,L");
    sub->add_option("--seed", cfg.seed, "RNG seed recorded in the manifest");
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;

    // Preload a config file if one is named, so CLI flags can override it.
    try {
        for (int i = 1; i + 1 < argc; ++i)
            if (std::strcmp(argv[i], "--config") == 0)
                cfg = fracwave::parse_config_file(argv[i + 1]);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    CLI::App app{"fracwave: mixed fractional NLS ground states, evolution and diagnostics"};
    app.require_subcommand(1);
    std::string config_path;

    auto* gs = app.add_subcommand("groundstate", "solve the stationary equation");
    add_common(gs, cfg, config_path);
    gs->add_option("--c", cfg.c, "prescribed mass");
    gs->add_option("--lambda", cfg.lambda, "fixed Lagrange multiplier");
    gs->add_option("--field", cfg.field_out, "output .frw path for the solution");

    auto* ev = app.add_subcommand("evolve", "integrate the time-dependent equation");
    add_common(ev, cfg, config_path);
    ev->add_option("--init", cfg.init_path, "initial field (.frw)");
    ev->add_option("--T", cfg.horizon, "time horizon");
    ev->add_option("--dt", cfg.dt0, "base time step");
    ev->add_flag("--adapt", cfg.adapt, "adaptive stepping");
    ev->add_option("--snapshots", cfg.snapshots_dir, "directory for field snapshots");

    auto* cl = app.add_subcommand("classify", "blow-up/global dichotomy verdict");
    add_common(cl, cfg, config_path);
    cl->add_option("--init", cfg.init_path, "initial field (.frw)");
    cl->add_option("--phi", cfg.phi_path, "ground state field (.frw)");

    auto* gb = app.add_subcommand("gamma-sweep", "ground-state branch over a mass list");
    add_common(gb, cfg, config_path);
    gb->add_option("--c-list", cfg.c_list, "mass samples")->delimiter(',');

    auto* in = app.add_subcommand("instability", "fibered perturbation experiment");
    add_common(in, cfg, config_path);
    in->add_option("--c", cfg.c, "ground-state mass");
    in->add_option("--tau-list", cfg.tau_list, "dilation factors")->delimiter(',');
    in->add_option("--T", cfg.horizon, "time horizon");
    in->add_option("--dt", cfg.dt0, "base time step");
    in->add_flag("--adapt", cfg.adapt, "adaptive stepping");

    auto* va = app.add_subcommand("validate", "run the analytic validation suite");
    add_common(va, cfg, config_path);

    CLI11_PARSE(app, argc, argv);

    for (auto* sub : {gs, ev, cl, gb, in, va})
        if (sub->parsed()) cfg.task = sub->get_name();

    try {
        return fracwave::run(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
