#pragma once

#include "fracwave/functionals.hpp"

#include <optional>

namespace fracwave {

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonConvergenceError : SolverError {
    using SolverError::SolverError;
};
struct MassUnreachableError : SolverError {
    using SolverError::SolverError;
};

struct GroundStateRecord {
    Field field;
    double lambda = 1.0;
    double mass = 0.0;
    double energy = 0.0;       // full E for mixed solves, s1-only for single solves
    double q_residual = 0.0;   // |Q| / (s1 a1 + s2 a2)
    double el_residual = 0.0;  // ||K u - |u|^{p-2} u||_2 / ||K u||_2
    int iterations = 0;
    bool converged = false;
    FunctionalTriple tri; // a2 = 0 for single-operator solves
};

// Petviashvili iteration for (-Delta)^{s1} phi + phi = phi^{p-1}.
GroundStateRecord solve_single_fractional(double s1, double p, const GridSpec& grid,
                                          const std::optional<Field>& seed = std::nullopt);

// Petviashvili iteration for (-Delta)^{s1} u + (-Delta)^{s2} u + lambda u = |u|^{p-2} u.
GroundStateRecord solve_mixed_fixed_lambda(const ModelParams& params, double lambda,
                                           const GridSpec& grid,
                                           const std::optional<Field>& seed = std::nullopt);

// Shoot on lambda within [lam_lo, lam_hi] until the solution mass matches c
// to 1e-6 relative.
GroundStateRecord mass_shoot(const ModelParams& params, double c, const GridSpec& grid,
                             double lam_lo = 1e-3, double lam_hi = 1e3);

struct GammaSample {
    double c;
    double gamma;
    double lambda;
    double q_residual;
    double el_residual;
    bool reachable;
};

struct GammaBranch {
    ModelParams model;
    std::vector<GammaSample> samples; // sorted by c
};

GammaBranch gamma_branch(const ModelParams& params, const std::vector<double>& c_list,
                         const GridSpec& grid);

// Largest increase of |u| along outward rays through the grid center; zero
// (up to slack) for a radially nonincreasing modulus.
double radial_profile_violation(const Field& u);

// Centered Gaussian seed exp(-r^2/2).
Field gaussian_seed(const GridSpec& grid, double width = 1.0, double amplitude = 1.0);

} // namespace fracwave
