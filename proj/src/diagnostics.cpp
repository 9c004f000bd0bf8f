#include "fracwave/diagnostics.hpp"

#include <cmath>
#include <sstream>

namespace fracwave {

namespace {

// Quintic Hermite blend of the radial derivative chi'(r) on [R, 10R]:
// chi'(R) = R with slope 1 and zero curvature, chi'(10R) = 0 flat.
// In the scaled variable rho = (r - R)/(9R):
//   chi'(r)/R = 1 + 9 rho - 64 rho^3 + 87 rho^4 - 33 rho^5.
double blend_prime(double rho) {
    return 1.0 + 9.0 * rho - 64.0 * rho * rho * rho + 87.0 * std::pow(rho, 4) -
           33.0 * std::pow(rho, 5);
}

double blend_second(double rho) {
    // d(chi')/dr = (1/9R) d(chi'/R)/drho * R = (1/9)(9 - 192 rho^2 + 348 rho^3 - 165 rho^4)
    return (9.0 - 192.0 * rho * rho + 348.0 * rho * rho * rho - 165.0 * std::pow(rho, 4)) / 9.0;
}

// Antiderivative of chi'/R in rho.
double blend_integral(double rho) {
    return rho + 4.5 * rho * rho - 16.0 * std::pow(rho, 4) + 17.4 * std::pow(rho, 5) -
           5.5 * std::pow(rho, 6);
}

} // namespace

double CutoffProfile::chi_second(double r) const {
    if (r <= R) return 1.0;
    if (r >= 10.0 * R) return 0.0;
    return blend_second((r - R) / (9.0 * R));
}

double CutoffProfile::chi_prime(double r) const {
    if (r <= R) return r;
    if (r >= 10.0 * R) return 0.0;
    return R * blend_prime((r - R) / (9.0 * R));
}

double CutoffProfile::chi(double r) const {
    if (r <= R) return 0.5 * r * r;
    const double cap = std::min(r, 10.0 * R);
    const double rho = (cap - R) / (9.0 * R);
    return 0.5 * R * R + 9.0 * R * R * blend_integral(rho);
}

CutoffProfile build_cutoff(double R, const GridSpec& grid) {
    if (!(R > 0.0)) throw std::invalid_argument("build_cutoff: R must be positive");
    if (!(10.0 * R < 0.5 * grid.box_length))
        throw std::invalid_argument("build_cutoff: box too small, need 10R < L/2");

    CutoffProfile cut;
    cut.R = R;
    cut.grid = grid;
    cut.chi_values.resize(grid.size());
    cut.grad_chi_values.resize(static_cast<std::size_t>(grid.dim) * grid.size());

    int ix[3];
    for (std::size_t i = 0; i < grid.size(); ++i) {
        unravel(grid, i, ix);
        double r2 = 0.0;
        double x[3] = {0, 0, 0};
        for (int a = 0; a < grid.dim; ++a) {
            x[a] = grid.coord(ix[a]);
            r2 += x[a] * x[a];
        }
        const double r = std::sqrt(r2);
        cut.chi_values[i] = cut.chi(r);
        const double dp = r > 0.0 ? cut.chi_prime(r) / r : 1.0; // grad = chi'(r) x/r
        for (int a = 0; a < grid.dim; ++a)
            cut.grad_chi_values[static_cast<std::size_t>(a) * grid.size() + i] = dp * x[a];
    }
    return cut;
}

double virial(const Field& psi, const CutoffProfile& cut) {
    if (!(psi.grid == cut.grid)) throw std::invalid_argument("virial: grid mismatch");
    double acc = 0.0;
    for (int a = 0; a < psi.grid.dim; ++a) {
        const Field du = derivative(psi, a);
        const double* gc = &cut.grad_chi_values[static_cast<std::size_t>(a) * psi.size()];
        double s = 0.0;
        for (std::size_t i = 0; i < psi.size(); ++i)
            s += gc[i] * std::imag(std::conj(psi.values[i]) * du.values[i]);
        acc += s;
    }
    return 2.0 * psi.grid.cell_volume() * acc;
}

const char* to_string(VerdictKind v) {
    switch (v) {
        case VerdictKind::GlobalPredicted: return "GlobalPredicted";
        case VerdictKind::FiniteTimeBlowupPredicted: return "FiniteTimeBlowupPredicted";
        case VerdictKind::GrowthOrBlowupPredicted: return "GrowthOrBlowupPredicted";
        case VerdictKind::Indeterminate: return "Indeterminate";
    }
    return "?";
}

BlowupVerdict classify(const Field& psi0, const GroundStateRecord& phi_record,
                       const ModelParams& params) {
    if (params.p < params.mass_critical_p() - 1e-12)
        throw std::invalid_argument("classify: p below the mass-critical exponent");
    if (!phi_record.converged)
        throw std::invalid_argument("classify: phi record not converged");

    const Exponents ex = exponents(params);
    const FunctionalTriple t0 = triple(psi0, params);
    const double E0 = energy(t0, params);
    const double M0 = mass(psi0);

    // phi thresholds use the s1-only functional.
    const double a1_phi = phi_record.tri.a1;
    const double b_phi = phi_record.tri.b;
    const double Mphi = phi_record.mass;
    const double Ephi = 0.5 * a1_phi - b_phi / params.p;

    BlowupVerdict v;
    auto check = [&](const std::string& name, double lhs, double rhs, bool strict_less) {
        const bool holds = strict_less ? lhs < rhs : lhs > rhs;
        v.rationale.push_back({name, lhs, rhs, holds});
        return holds;
    };

    if (ex.s_c > 0.0) {
        const double e_lhs = E0 * std::pow(M0, ex.sigma_c);
        const double e_rhs = Ephi * std::pow(Mphi, ex.sigma_c);
        const double g_lhs = std::sqrt(t0.a1) * std::pow(M0, 0.5 * ex.sigma_c);
        const double g_rhs = std::sqrt(a1_phi) * std::pow(Mphi, 0.5 * ex.sigma_c);

        const bool energy_below = check("E(psi0) M^sigma < E(phi) M(phi)^sigma", e_lhs, e_rhs, true);
        const bool grad_below = check("grad_s1 M^sigma/2 < phi threshold", g_lhs, g_rhs, true);
        if (energy_below && grad_below) {
            v.kind = VerdictKind::GlobalPredicted;
            return v;
        }
        if (params.p < 2.0 + 4.0 * params.s1) {
            const bool negative_energy = check("E(psi0) < 0", E0, 0.0, true);
            const bool grad_above = check("grad_s1 M^sigma/2 > phi threshold", g_lhs, g_rhs, false);
            if (negative_energy || (energy_below && grad_above)) {
                v.kind = VerdictKind::FiniteTimeBlowupPredicted;
                return v;
            }
        }
        v.kind = VerdictKind::Indeterminate;
        return v;
    }

    // Mass-critical branch.
    if (check("E(psi0) < 0", E0, 0.0, true)) {
        v.kind = VerdictKind::GrowthOrBlowupPredicted;
        return v;
    }
    v.kind = VerdictKind::Indeterminate;
    return v;
}

InvarianceReport monitor_invariance(const TrajectoryRecord& traj,
                                    const GroundStateRecord& phi_record,
                                    const ModelParams& params) {
    const Exponents ex = exponents(params);
    if (!(ex.s_c > 0.0))
        throw std::invalid_argument("monitor_invariance: requires s_c > 0");

    InvarianceReport rep;
    rep.x0 = std::sqrt(phi_record.tri.a1) * std::pow(phi_record.mass, 0.5 * ex.sigma_c);
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const double x = traj.grad_s1_series[i] * std::pow(traj.mass_series[i], 0.5 * ex.sigma_c);
        rep.signs.push_back(x < rep.x0 ? -1 : +1);
        if (i > 0 && rep.signs[i] != rep.signs[i - 1]) ++rep.sign_flips;
    }
    return rep;
}

InstabilityReport instability_experiment(const GroundStateRecord& uc_record, double tau,
                                         double horizon, const StepPolicy& policy,
                                         const ModelParams& params) {
    if (!(tau > 1.0 && tau <= 2.0))
        throw std::invalid_argument("instability_experiment: tau must lie in (1, 2]");
    if (!uc_record.converged)
        throw std::invalid_argument("instability_experiment: record not converged");

    const Field v = dilate(uc_record.field, tau);
    const double Ev = energy(v, params);
    const double Euc = energy(uc_record.field, params);
    const double Qv = pohozaev_q(v, params);
    if (!(Ev < Euc && Qv < 0.0)) {
        std::ostringstream os;
        os << "PerturbationNotInQc: E(v) = " << Ev << " vs E(u_c) = " << Euc
           << ", Q(v) = " << Qv;
        throw PerturbationNotInQcError(os.str());
    }

    const Field diff = v - uc_record.field;
    const double dist = std::sqrt(mass(diff)) + std::sqrt(seminorm_sq(diff, params.s1));

    TrajectoryRecord traj = evolve(v, horizon, policy, params);
    double max_factor = 1.0;
    const double g0 = traj.grad_s1_series.front();
    for (double g : traj.grad_s1_series) max_factor = std::max(max_factor, g / g0);

    return {tau, Ev, Euc, Qv, dist, max_factor, traj.verdict};
}

} // namespace fracwave
