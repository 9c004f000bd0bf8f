#include "fracwave/functionals.hpp"

#include <cmath>
#include <sstream>

namespace fracwave {

ModelParams::ModelParams(double s1_, double s2_, double p_, int N_)
    : s1(s1_), s2(s2_), p(p_), N(N_) {
    if (!(s2 > 0.0 && s2 < s1 && s1 <= 1.0))
        throw std::invalid_argument("ModelParams: need 0 < s2 < s1 <= 1");
    if (!(p > 2.0)) throw std::invalid_argument("ModelParams: need p > 2");
    if (N < 1 || N > 3) throw std::invalid_argument("ModelParams: N must be 1, 2 or 3");
    if (N > 2.0 * s1 && !(p < 2.0 * N / (N - 2.0 * s1))) {
        std::ostringstream os;
        os << "ModelParams: energy-subcritical gate violated, need p < 2N/(N-2 s1) = "
           << 2.0 * N / (N - 2.0 * s1);
        throw std::invalid_argument(os.str());
    }
}

FunctionalTriple triple(const Field& u, const ModelParams& params) {
    FunctionalTriple t;
    t.a1 = seminorm_sq(u, params.s1);
    t.a2 = seminorm_sq(u, params.s2);
    t.b = lp_integral(u, params.p);
    return t;
}

double energy(const FunctionalTriple& tri, const ModelParams& params) {
    return 0.5 * tri.a1 + 0.5 * tri.a2 - tri.b / params.p;
}

double energy(const Field& u, const ModelParams& params) {
    return energy(triple(u, params), params);
}

double pohozaev_q(const FunctionalTriple& tri, const ModelParams& params) {
    const double w = params.N * (params.p - 2.0) / (2.0 * params.p);
    return params.s1 * tri.a1 + params.s2 * tri.a2 - w * tri.b;
}

double pohozaev_q(const Field& u, const ModelParams& params) {
    return pohozaev_q(triple(u, params), params);
}

double fibered_energy(const FunctionalTriple& tri, const ModelParams& params, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("fibered_energy: t must be positive");
    return 0.5 * std::pow(t, 2.0 * params.s1) * tri.a1 +
           0.5 * std::pow(t, 2.0 * params.s2) * tri.a2 -
           std::pow(t, params.nonlinear_power()) * tri.b / params.p;
}

double fibered_q(const FunctionalTriple& tri, const ModelParams& params, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("fibered_q: t must be positive");
    const double w = params.N * (params.p - 2.0) / (2.0 * params.p);
    return params.s1 * std::pow(t, 2.0 * params.s1) * tri.a1 +
           params.s2 * std::pow(t, 2.0 * params.s2) * tri.a2 -
           w * std::pow(t, params.nonlinear_power()) * tri.b;
}

double project_to_pohozaev(const FunctionalTriple& tri, const ModelParams& params) {
    if (!(tri.b > 0.0)) throw NoRootError("project_to_pohozaev: nonlinear term vanishes");
    if (params.is_mass_critical() && !(0.5 * tri.a1 < tri.b / params.p)) {
        std::ostringstream os;
        os << "project_to_pohozaev: mass-critical membership fails, a1/2 = "
           << 0.5 * tri.a1 << " >= b/p = " << tri.b / params.p;
        throw NoRootError(os.str());
    }

    auto q = [&](double t) { return fibered_q(tri, params, t); };

    // Q(u_t) > 0 for small t; double an upper bound until the sign flips.
    double lo = 1e-6;
    double hi = 1.0;
    int guard = 0;
    while (q(hi) > 0.0) {
        hi *= 2.0;
        if (++guard > 200) throw NoRootError("project_to_pohozaev: no sign change found");
    }
    while (q(lo) <= 0.0) {
        lo *= 0.5;
        if (++guard > 400) throw NoRootError("project_to_pohozaev: no sign change found");
    }

    // Bisection to a loose bracket.
    while ((hi - lo) / hi > 1e-3) {
        const double mid = 0.5 * (lo + hi);
        (q(mid) > 0.0 ? lo : hi) = mid;
    }

    // Safeguarded Newton on q.
    const double w = params.N * (params.p - 2.0) / (2.0 * params.p);
    const double np = params.nonlinear_power();
    auto dq = [&](double t) {
        return 2.0 * params.s1 * params.s1 * std::pow(t, 2.0 * params.s1 - 1.0) * tri.a1 +
               2.0 * params.s2 * params.s2 * std::pow(t, 2.0 * params.s2 - 1.0) * tri.a2 -
               w * np * std::pow(t, np - 1.0) * tri.b;
    };
    double t = 0.5 * (lo + hi);
    for (int it = 0; it < 100; ++it) {
        const double qt = q(t);
        (qt > 0.0 ? lo : hi) = t;
        const double step = qt / dq(t);
        double next = t - step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - t) <= 1e-13 * t) return next;
        t = next;
    }
    return t;
}

double gn_quotient(const Field& u, double s, double p) {
    const double m = mass(u);
    if (!(m > 0.0)) throw std::invalid_argument("gn_quotient: zero field");
    const double a = seminorm_sq(u, s);
    const double b = lp_integral(u, p);
    const int N = u.grid.dim;
    const double theta = N * (p - 2.0) / (4.0 * s);
    return b / (std::pow(a, theta) * std::pow(m, 0.5 * p - theta));
}

double gn_constant_from_groundstate(const Field& phi, double s1, double p, int N) {
    if (phi.grid.dim != N)
        throw std::invalid_argument("gn_constant_from_groundstate: dimension mismatch");
    // Single-operator Pohozaev residual as a convergence certificate. States
    // with algebraic tails carry a box-truncation defect of order 1e-4 on
    // practical grids, while fields that do not solve the equation sit at
    // order one, so 1e-3 separates the two cleanly.
    const double a1 = seminorm_sq(phi, s1);
    const double b = lp_integral(phi, p);
    const double q = s1 * a1 - N * (p - 2.0) / (2.0 * p) * b;
    if (std::abs(q) > 1e-3 * s1 * a1)
        throw std::invalid_argument(
            "gn_constant_from_groundstate: Pohozaev residual above tolerance");
    const double np2 = N * (p - 2.0);
    const double c2 = mass(phi);
    return (2.0 * s1 * p / np2) *
           std::pow(np2 / (2.0 * s1 * p - np2), (4.0 * s1 - N * p + 2.0 * N) / (4.0 * s1)) *
           std::pow(c2, 0.5 * (2.0 - p));
}

double critical_mass(int N, double s1, double C) {
    if (!(C > 0.0)) throw std::invalid_argument("critical_mass: C must be positive");
    return std::pow((N + 2.0 * s1) / (N * C), N / (2.0 * s1));
}

Exponents exponents(const ModelParams& params) {
    const double sc = 0.5 * params.N - 2.0 * params.s1 / (params.p - 2.0);
    if (sc < -1e-12)
        throw std::invalid_argument("exponents: p below the mass-critical exponent");
    if (sc < 1e-12) return {0.0, kSigmaInf};
    return {sc, (params.s1 - sc) / sc};
}

double dichotomy_f(double x, const ModelParams& params, double C) {
    return 0.5 * x * x -
           C / params.p * std::pow(x, params.nonlinear_power() / params.s1);
}

double dichotomy_x0(const ModelParams& params, double C) {
    const double np2 = params.N * (params.p - 2.0);
    if (!(np2 > 4.0 * params.s1))
        throw std::invalid_argument("dichotomy_x0: p must exceed the mass-critical exponent");
    return std::pow(2.0 * params.p * params.s1 / (C * np2), 2.0 * params.s1 / (np2 - 4.0 * params.s1));
}

} // namespace fracwave
