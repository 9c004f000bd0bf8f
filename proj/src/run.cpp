#include "fracwave/config.hpp"
#include "fracwave/diagnostics.hpp"
#include "fracwave/io.hpp"

#include <json.hpp>
#include <omp.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace fracwave {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr const char* kVersion = "fracwave 0.1.0";

void apply_thread_cap() {
    if (const char* env = std::getenv("FRACWAVE_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0) omp_set_num_threads(t);
    }
}

json record_json(const GroundStateRecord& rec) {
    return json{{"lambda", rec.lambda},
                {"mass", rec.mass},
                {"energy", rec.energy},
                {"q_residual", rec.q_residual},
                {"el_residual", rec.el_residual},
                {"iterations", rec.iterations},
                {"converged", rec.converged},
                {"a1", rec.tri.a1},
                {"a2", rec.tri.a2},
                {"b", rec.tri.b}};
}

struct Manifest {
    fs::path dir;
    json doc;

    explicit Manifest(const RunConfig& cfg) : dir(cfg.out_dir) {
        fs::create_directories(dir);
        doc["version"] = kVersion;
        doc["config"] = json::object();
        for (const auto& [k, v] : cfg.echo()) doc["config"][k] = v;
        doc["outputs"] = json::object();
    }
    void add(const fs::path& file) { doc["outputs"][file.filename().string()] = file_hash(file); }
    void write() const {
        std::ofstream os(dir / "manifest.json");
        os << doc.dump(2) << "\n";
    }
};

void write_trajectory_csv(const TrajectoryRecord& traj, const fs::path& path) {
    std::ofstream os(path);
    os << "t,mass,energy,grad_s1,grad_s2,virial,linf\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i)
        os << fmt17(traj.times[i]) << ',' << fmt17(traj.mass_series[i]) << ','
           << fmt17(traj.energy_series[i]) << ',' << fmt17(traj.grad_s1_series[i]) << ','
           << fmt17(traj.grad_s2_series[i]) << ',' << fmt17(traj.virial_series[i]) << ','
           << fmt17(traj.linf_series[i]) << '\n';
}

StepPolicy policy_from(const RunConfig& cfg) {
    StepPolicy pol;
    pol.dt0 = cfg.dt0;
    pol.adapt = cfg.adapt;
    pol.dt_floor = cfg.dt_floor;
    pol.blowup_gradient_factor = cfg.blowup_gradient_factor;
    pol.monitor_every = cfg.monitor_every;
    return pol;
}

// Rebuild a ground-state record from a stored phi snapshot (single-operator
// quantities only, as used by the classifier).
GroundStateRecord phi_record_from_file(const fs::path& path, const ModelParams& params) {
    const Field phi = load_field(path);
    GroundStateRecord rec;
    rec.field = phi;
    rec.mass = mass(phi);
    rec.tri.a1 = seminorm_sq(phi, params.s1);
    rec.tri.a2 = 0.0;
    rec.tri.b = lp_integral(phi, params.p);
    rec.energy = 0.5 * rec.tri.a1 - rec.tri.b / params.p;
    const double q = params.s1 * rec.tri.a1 -
                     params.N * (params.p - 2.0) / (2.0 * params.p) * rec.tri.b;
    rec.q_residual = std::abs(q) / (params.s1 * rec.tri.a1);
    rec.el_residual = 0.0;
    rec.converged = rec.q_residual <= 1e-4;
    if (!rec.converged)
        throw std::runtime_error("phi snapshot fails the Pohozaev residual check: " +
                                 std::to_string(rec.q_residual));
    return rec;
}

int run_groundstate(const RunConfig& cfg, Manifest& man) {
    const ModelParams params = cfg.model();
    GroundStateRecord rec;
    if (cfg.c > 0.0)
        rec = mass_shoot(params, cfg.c, cfg.grid());
    else if (cfg.lambda > 0.0)
        rec = solve_mixed_fixed_lambda(params, cfg.lambda, cfg.grid());
    else
        throw ConfigError("groundstate: need c > 0 or lambda > 0");

    const fs::path rec_path = man.dir / "record.json";
    {
        json j = record_json(rec);
        j["boundary_mass"] = boundary_max_abs(rec.field);
        std::ofstream os(rec_path);
        os << j.dump(2) << "\n";
    }
    man.add(rec_path);
    const fs::path field_path =
        cfg.field_out.empty() ? man.dir / "phi.frw" : fs::path(cfg.field_out);
    save_field(rec.field, field_path);
    man.add(field_path);
    return 0;
}

int run_evolve(const RunConfig& cfg, Manifest& man) {
    if (cfg.init_path.empty()) throw ConfigError("evolve: init field required");
    const Field psi0 = load_field(cfg.init_path);
    const ModelParams params = cfg.model();
    StepPolicy pol = policy_from(cfg);
    if (!cfg.snapshots_dir.empty()) {
        pol.keep_snapshots = true;
        pol.snapshot_every = 10;
    }
    TrajectoryRecord traj = evolve(psi0, cfg.horizon, pol, params);

    const fs::path csv = man.dir / "traj.csv";
    write_trajectory_csv(traj, csv);
    man.add(csv);
    man.doc["verdict"] = to_string(traj.verdict);
    // Runs outside the well-posedness hypotheses are flagged, not refused.
    man.doc["outside_theory"] = cfg.s2 <= 0.5 || cfg.dim < 2;
    if (!cfg.snapshots_dir.empty()) {
        fs::create_directories(cfg.snapshots_dir);
        for (std::size_t i = 0; i < traj.snapshots.size(); ++i) {
            const fs::path p = fs::path(cfg.snapshots_dir) / ("snap_" + std::to_string(i) + ".frw");
            save_field(traj.snapshots[i], p);
        }
    }
    return 0;
}

int run_classify(const RunConfig& cfg, Manifest& man) {
    if (cfg.init_path.empty() || cfg.phi_path.empty())
        throw ConfigError("classify: init and phi fields required");
    const ModelParams params = cfg.model();
    const Field psi0 = load_field(cfg.init_path);
    const GroundStateRecord phi = phi_record_from_file(cfg.phi_path, params);
    const BlowupVerdict v = classify(psi0, phi, params);

    json j;
    j["verdict"] = to_string(v.kind);
    j["ledger"] = json::array();
    for (const auto& c : v.rationale)
        j["ledger"].push_back(
            {{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}});
    const fs::path out = man.dir / "verdict.json";
    std::ofstream os(out);
    os << j.dump(2) << "\n";
    os.close();
    man.add(out);
    std::cout << to_string(v.kind) << "\n";
    return 0;
}

int run_gamma_sweep(const RunConfig& cfg, Manifest& man) {
    if (cfg.c_list.empty()) throw ConfigError("gamma-sweep: c_list required");
    const GammaBranch branch = gamma_branch(cfg.model(), cfg.c_list, cfg.grid());

    const fs::path csv = man.dir / "branch.csv";
    {
        std::ofstream os(csv);
        os << "c,gamma,lambda,q_residual,el_residual,reachable\n";
        for (const auto& s : branch.samples)
            os << fmt17(s.c) << ',' << fmt17(s.gamma) << ',' << fmt17(s.lambda) << ','
               << fmt17(s.q_residual) << ',' << fmt17(s.el_residual) << ','
               << (s.reachable ? 1 : 0) << '\n';
    }
    man.add(csv);

    bool monotone = true;
    for (std::size_t i = 1; i < branch.samples.size(); ++i)
        if (branch.samples[i].reachable && branch.samples[i - 1].reachable &&
            branch.samples[i].gamma > branch.samples[i - 1].gamma + 1e-6)
            monotone = false;
    man.doc["gamma_nonincreasing"] = monotone;
    std::cout << "gamma nonincreasing: " << (monotone ? "yes" : "NO") << "\n";
    return monotone ? 0 : 1;
}

int run_instability(const RunConfig& cfg, Manifest& man) {
    if (!(cfg.c > 0.0)) throw ConfigError("instability: c required");
    const ModelParams params = cfg.model();
    const GroundStateRecord uc = mass_shoot(params, cfg.c, cfg.grid());

    const fs::path csv = man.dir / "instability.csv";
    std::ofstream os(csv);
    os << "tau,energy_v,energy_uc,q_v,h_s1_distance,max_growth_factor,verdict\n";
    for (double tau : cfg.tau_list) {
        const InstabilityReport rep =
            instability_experiment(uc, tau, cfg.horizon, policy_from(cfg), params);
        os << fmt17(rep.tau) << ',' << fmt17(rep.energy_v) << ',' << fmt17(rep.energy_uc) << ','
           << fmt17(rep.q_v) << ',' << fmt17(rep.h_s1_distance) << ','
           << fmt17(rep.max_growth_factor) << ',' << to_string(rep.verdict) << '\n';
    }
    os.close();
    man.add(csv);
    return 0;
}

int run_validate(const RunConfig&, Manifest& man) {
    struct Case {
        std::string name;
        bool pass;
    };
    std::vector<Case> cases;

    {
        // Plane-wave eigenvalue of the fractional symbol.
        GridSpec g(1, 64, 2.0 * M_PI);
        const SpectralMultiplier m = build_fractional_symbol(g, 0.5);
        Field u(g);
        for (int j = 0; j < g.n_per_axis; ++j)
            u.values[static_cast<std::size_t>(j)] = std::exp(complex(0.0, 4.0 * g.coord(j)));
        const Field v = apply_multiplier(u, m);
        double err = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i)
            err = std::max(err, std::abs(v.values[i] - 4.0 * u.values[i]));
        cases.push_back({"plane-wave multiplier", err < 1e-11});
    }
    {
        // Classical soliton recovery in the s1 = 1 validation limit.
        GridSpec g(1, 1024, 80.0);
        const GroundStateRecord rec = solve_single_fractional(1.0, 4.0, g);
        double err = 0.0;
        for (std::size_t i = 0; i < rec.field.size(); ++i) {
            const double x = g.coord(static_cast<int>(i));
            err = std::max(err, std::abs(rec.field.values[i].real() -
                                         std::sqrt(2.0) / std::cosh(x)));
        }
        cases.push_back({"sech soliton", err < 1e-6});
        cases.push_back({"soliton mass = 4", std::abs(rec.mass - 4.0) < 1e-6});
    }
    {
        // Mass conservation of the propagator on smooth data.
        GridSpec g(1, 256, 40.0);
        ModelParams params(0.75, 0.6, 4.0, 1);
        Field psi0 = gaussian_seed(g, 1.0, 1.0);
        StepPolicy pol;
        pol.dt0 = 1e-3;
        TrajectoryRecord traj = evolve(psi0, 1.0, pol, params);
        const double drift =
            std::abs(traj.mass_series.back() - traj.mass_series.front()) / traj.mass_series.front();
        cases.push_back({"mass conservation", drift < 1e-10});
    }

    bool all = true;
    for (const auto& c : cases) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "\n";
        all = all && c.pass;
    }
    man.doc["validate_pass"] = all;
    return all ? 0 : 1;
}

} // namespace

int run(const RunConfig& cfg) {
    apply_thread_cap();
    cfg.validate();
    Manifest man(cfg);
    int status = 1;
    try {
        if (cfg.task == "groundstate") status = run_groundstate(cfg, man);
        else if (cfg.task == "evolve") status = run_evolve(cfg, man);
        else if (cfg.task == "classify") status = run_classify(cfg, man);
        else if (cfg.task == "gamma-sweep") status = run_gamma_sweep(cfg, man);
        else if (cfg.task == "instability") status = run_instability(cfg, man);
        else if (cfg.task == "validate") status = run_validate(cfg, man);
    } catch (const std::exception& e) {
        json err{{"error", e.what()}, {"task", cfg.task}};
        std::ofstream os(fs::path(cfg.out_dir) / "error.json");
        os << err.dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        man.write();
        return 1;
    }
    man.write();
    return status;
}

} // namespace fracwave
