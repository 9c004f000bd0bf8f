#pragma once

#include "fracwave/functionals.hpp"

namespace fracwave {

struct StepPolicy {
    double dt0 = 1e-3;
    bool adapt = false;
    double dt_floor = 1e-9;
    double blowup_gradient_factor = 50.0;
    int monitor_every = 10;
    bool keep_snapshots = false;
    int snapshot_every = 0; // in monitor samples; 0 = only first/last

    void validate() const;
};

enum class Verdict { CompletedHorizon, BlowupDetected, DtUnderflow };

const char* to_string(Verdict v);

struct TrajectoryRecord {
    std::vector<double> times;
    std::vector<double> mass_series;
    std::vector<double> energy_series;
    std::vector<double> grad_s1_series; // ||(-Delta)^{s1/2} psi||_2
    std::vector<double> grad_s2_series;
    std::vector<double> virial_series;  // 0 unless a cutoff is attached
    std::vector<double> linf_series;
    std::vector<Field> snapshots;
    Verdict verdict = Verdict::CompletedHorizon;
};

// One application of the exact linear group S(dt); unitary in discrete L2.
Field linear_step(const Field& psi, double dt, const ModelParams& params);

// Exact pointwise nonlinear phase flow over dt; modulus preserving.
Field nonlinear_step(const Field& psi, double dt, double p);

// Strang composition S(dt/2) . N(dt) . S(dt/2).
Field strang_step(const Field& psi, double dt, const ModelParams& params);

struct CutoffProfile; // diagnostics.hpp

Field evolve_snapshot(const Field& psi0, double horizon, const StepPolicy& policy,
                      const ModelParams& params);

TrajectoryRecord evolve(const Field& psi0, double horizon, const StepPolicy& policy,
                        const ModelParams& params, const CutoffProfile* virial_cutoff = nullptr);

} // namespace fracwave
