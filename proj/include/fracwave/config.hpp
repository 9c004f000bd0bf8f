#pragma once

#include "fracwave/functionals.hpp"

#include <filesystem>
#include <map>
#include <string>

namespace fracwave {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat key=value run configuration; CLI flags override file values.
struct RunConfig {
    std::string task; // groundstate | evolve | classify | gamma-sweep | instability | validate

    double s1 = 0.75;
    double s2 = 0.5;
    double p = 6.0;
    int dim = 1;
    int n = 1024;
    double box_length = 80.0;

    double c = 0.0;      // target mass (groundstate/instability); 0 = unset
    double lambda = 0.0; // fixed multiplier (groundstate); 0 = unset

    double horizon = 10.0;
    double dt0 = 1e-3;
    bool adapt = false;
    double dt_floor = 1e-9;
    double blowup_gradient_factor = 50.0;
    int monitor_every = 10;

    std::vector<double> tau_list{1.05, 1.1, 1.2};
    std::vector<double> c_list;

    std::string init_path;
    std::string phi_path;
    std::string field_out;
    std::string out_dir = "out";
    std::string snapshots_dir;
    unsigned long seed = 12345;

    ModelParams model() const { return {s1, s2, p, dim}; }
    GridSpec grid() const { return {dim, n, box_length}; }
    void validate() const;

    // Ordered echo of every resolved key, for the manifest.
    std::map<std::string, std::string> echo() const;
};

RunConfig parse_config_file(const std::filesystem::path& path);
void apply_key(RunConfig& cfg, const std::string& key, const std::string& value);

// Dispatch a validated config; returns the process exit status.
int run(const RunConfig& cfg);

} // namespace fracwave
