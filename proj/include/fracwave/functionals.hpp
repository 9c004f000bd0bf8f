#pragma once

#include "fracwave/spectral.hpp"

#include <limits>

namespace fracwave {

// Model exponents: linear part (-Delta)^{s1} + (-Delta)^{s2} with
// 0 < s2 < s1 <= 1, nonlinearity |u|^{p-2}u, space dimension N.
struct ModelParams {
    double s1;
    double s2;
    double p;
    int N;

    ModelParams(double s1_, double s2_, double p_, int N_);

    double mass_critical_p() const { return 2.0 + 4.0 * s1 / N; }
    bool is_mass_critical() const { return std::abs(p - mass_critical_p()) < 1e-12; }
    // Exponent of t on the nonlinear term of the fibered energy.
    double nonlinear_power() const { return 0.5 * N * (p - 2.0); }
};

// The three integrals every functional is built from:
//   a1 = ||(-Delta)^{s1/2} u||_2^2, a2 = ||(-Delta)^{s2/2} u||_2^2,
//   b  = integral of |u|^p.
struct FunctionalTriple {
    double a1 = 0.0;
    double a2 = 0.0;
    double b = 0.0;
};

FunctionalTriple triple(const Field& u, const ModelParams& params);

double energy(const FunctionalTriple& tri, const ModelParams& params);
double energy(const Field& u, const ModelParams& params);

// Q(u) = s1 a1 + s2 a2 - N(p-2)/(2p) b, the scaling derivative of E at t=1.
double pohozaev_q(const FunctionalTriple& tri, const ModelParams& params);
double pohozaev_q(const Field& u, const ModelParams& params);

// E(u_t) evaluated analytically from the triple.
double fibered_energy(const FunctionalTriple& tri, const ModelParams& params, double t);
// Q(u_t) = t * d/dt E(u_t).
double fibered_q(const FunctionalTriple& tri, const ModelParams& params, double t);

struct NoRootError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unique t_u > 0 with Q(u_{t_u}) = 0; the fibered energy is maximal there.
// In the mass-critical case requires a1/2 < b/p, otherwise throws NoRootError.
double project_to_pohozaev(const FunctionalTriple& tri, const ModelParams& params);

// Weinstein quotient whose supremum over nonzero u is the optimal
// Gagliardo-Nirenberg constant for exponent pair (s, p).
double gn_quotient(const Field& u, double s, double p);

// Closed-form optimal constant from a converged ground state of
// (-Delta)^{s1} phi + phi = phi^{p-1}.
double gn_constant_from_groundstate(const Field& phi, double s1, double p, int N);

// Threshold mass ((N + 2 s1)/(N C))^{N/(2 s1)} at the mass-critical exponent.
double critical_mass(int N, double s1, double C);

struct Exponents {
    double s_c;
    double sigma_c; // +inf sentinel when s_c = 0
};

Exponents exponents(const ModelParams& params);

constexpr double kSigmaInf = std::numeric_limits<double>::infinity();

// f(x) = x^2/2 - (C/p) x^{N(p-2)/(2 s1)} controlling the dichotomy, and its
// unique critical point. Requires p strictly above the mass-critical exponent.
double dichotomy_f(double x, const ModelParams& params, double C);
double dichotomy_x0(const ModelParams& params, double C);

} // namespace fracwave
