#pragma once

#include "fracwave/evolution.hpp"
#include "fracwave/groundstate.hpp"

#include <string>

namespace fracwave {

// Radial cut-off with quadratic core: chi_R(r) = r^2/2 on [0, R], constant
// beyond 10R, C^2 quintic blend in between with chi_R'' <= 1 everywhere.
struct CutoffProfile {
    double R = 1.0;
    GridSpec grid;
    std::vector<double> chi_values;
    std::vector<double> grad_chi_values; // dim * size, axis-major

    double chi(double r) const;
    double chi_prime(double r) const;
    double chi_second(double r) const;
};

CutoffProfile build_cutoff(double R, const GridSpec& grid);

// M_chi[u] = 2 Im integral of conj(u) grad(chi) . grad(u).
double virial(const Field& psi, const CutoffProfile& cut);

enum class VerdictKind {
    GlobalPredicted,
    FiniteTimeBlowupPredicted,
    GrowthOrBlowupPredicted,
    Indeterminate
};

const char* to_string(VerdictKind v);

struct InequalityCheck {
    std::string name;
    double lhs;
    double rhs;
    bool holds;
};

struct BlowupVerdict {
    VerdictKind kind = VerdictKind::Indeterminate;
    std::vector<InequalityCheck> rationale;
};

// Dichotomy classifier from the energy/gradient comparisons against the
// single-operator ground state phi.
BlowupVerdict classify(const Field& psi0, const GroundStateRecord& phi_record,
                       const ModelParams& params);

struct InvarianceReport {
    double x0 = 0.0;
    int sign_flips = 0;
    std::vector<int> signs; // per trajectory sample
};

// Sign of ||(-Delta)^{s1/2} psi|| * ||psi||^{sigma_c} - x0 along a trajectory;
// flips indicate a crossing of the forbidden threshold.
InvarianceReport monitor_invariance(const TrajectoryRecord& traj,
                                    const GroundStateRecord& phi_record,
                                    const ModelParams& params);

struct PerturbationNotInQcError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InstabilityReport {
    double tau;
    double energy_v;
    double energy_uc;
    double q_v;
    double h_s1_distance; // ||v - u_c||_{H^{s1}} at t = 0
    double max_growth_factor;
    Verdict verdict;
};

// Evolve the outward-dilated ground state v = (u_c)_tau and record the
// gradient growth it triggers.
InstabilityReport instability_experiment(const GroundStateRecord& uc_record, double tau,
                                         double horizon, const StepPolicy& policy,
                                         const ModelParams& params);

} // namespace fracwave
