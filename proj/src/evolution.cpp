#include "fracwave/evolution.hpp"

#include "fracwave/diagnostics.hpp"
#include "fracwave/fft.hpp"
#include "fracwave/kernels.hpp"

#include <cmath>

namespace fracwave {

void StepPolicy::validate() const {
    if (!(dt0 > 0.0)) throw std::invalid_argument("StepPolicy: dt0 must be positive");
    if (!(dt_floor > 0.0 && dt_floor < dt0))
        throw std::invalid_argument("StepPolicy: need 0 < dt_floor < dt0");
    if (!(blowup_gradient_factor > 1.0))
        throw std::invalid_argument("StepPolicy: blowup_gradient_factor must exceed 1");
    if (monitor_every < 1) throw std::invalid_argument("StepPolicy: monitor_every must be >= 1");
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::CompletedHorizon: return "CompletedHorizon";
        case Verdict::BlowupDetected: return "BlowupDetected";
        case Verdict::DtUnderflow: return "DtUnderflow";
    }
    return "?";
}

Field linear_step(const Field& psi, double dt, const ModelParams& params) {
    const SpectralMultiplier m = build_mixed_symbol(psi.grid, params.s1, params.s2);
    Field out = to_spectral(psi);
    kernels::linear_phase(out.values, m.symbol, dt);
    fft_inverse(out.grid, out.values);
    return out;
}

Field nonlinear_step(const Field& psi, double dt, double p) {
    Field out = psi;
    kernels::nonlinear_phase(out.values, dt, p);
    return out;
}

Field strang_step(const Field& psi, double dt, const ModelParams& params) {
    Field out = linear_step(psi, 0.5 * dt, params);
    out = nonlinear_step(out, dt, params.p);
    return linear_step(out, 0.5 * dt, params);
}

namespace {

// Propagator with cached symbols and de-aliasing mask.
struct Stepper {
    const ModelParams& params;
    GridSpec grid;
    std::vector<double> sym_mixed, sym_s1, sym_s2;
    std::vector<char> alias_mask; // 1 = keep
    bool filter;

    Stepper(const GridSpec& g, const ModelParams& prm)
        : params(prm), grid(g), filter(prm.p >= 4.0) {
        sym_s1 = build_fractional_symbol(g, prm.s1).symbol;
        sym_s2 = build_fractional_symbol(g, prm.s2).symbol;
        sym_mixed.resize(sym_s1.size());
        for (std::size_t i = 0; i < sym_mixed.size(); ++i)
            sym_mixed[i] = sym_s1[i] + sym_s2[i];
        alias_mask.assign(g.size(), 1);
        const int kmax = g.n_per_axis / 3;
        int ix[3];
        for (std::size_t i = 0; i < alias_mask.size(); ++i) {
            unravel(g, i, ix);
            for (int a = 0; a < g.dim; ++a)
                if (std::abs(g.mode(ix[a])) > kmax) alias_mask[i] = 0;
        }
    }

    void step(Field& psi, double dt) const {
        fft_forward(grid, psi.values);
        kernels::linear_phase(psi.values, sym_mixed, 0.5 * dt);
        fft_inverse(grid, psi.values);
        kernels::nonlinear_phase(psi.values, dt, params.p);
        fft_forward(grid, psi.values);
        kernels::linear_phase(psi.values, sym_mixed, 0.5 * dt);
        if (filter)
            for (std::size_t i = 0; i < psi.values.size(); ++i)
                if (!alias_mask[i]) psi.values[i] = 0.0;
        fft_inverse(grid, psi.values);
    }
};

} // namespace

TrajectoryRecord evolve(const Field& psi0, double horizon, const StepPolicy& policy,
                        const ModelParams& params, const CutoffProfile* virial_cutoff) {
    policy.validate();
    if (psi0.grid.dim != params.N)
        throw std::invalid_argument("evolve: grid dimension does not match params.N");

    const Stepper stepper(psi0.grid, params);
    TrajectoryRecord rec;
    Field psi = psi0;

    const double rate0 = std::pow(std::max(norm_linf(psi0), 1e-300), params.p - 2.0);
    double grad0 = 0.0;

    auto sample = [&](double t) {
        Field hat = to_spectral(psi);
        const double scale = psi.grid.cell_volume() / static_cast<double>(psi.size());
        const double a1 = scale * kernels::sum_weighted_abs2(hat.values, stepper.sym_s1);
        const double a2 = scale * kernels::sum_weighted_abs2(hat.values, stepper.sym_s2);
        const double m = mass(psi);
        const double b = lp_integral(psi, params.p);
        rec.times.push_back(t);
        rec.mass_series.push_back(m);
        rec.energy_series.push_back(0.5 * a1 + 0.5 * a2 - b / params.p);
        rec.grad_s1_series.push_back(std::sqrt(a1));
        rec.grad_s2_series.push_back(std::sqrt(a2));
        rec.virial_series.push_back(virial_cutoff ? virial(psi, *virial_cutoff) : 0.0);
        rec.linf_series.push_back(norm_linf(psi));
        if (policy.keep_snapshots) {
            const bool periodic = policy.snapshot_every > 0 &&
                                  (rec.times.size() - 1) % static_cast<std::size_t>(policy.snapshot_every) == 0;
            if (rec.times.size() == 1 || periodic) rec.snapshots.push_back(psi);
        }
        return std::sqrt(a1);
    };

    grad0 = sample(0.0);
    double t = 0.0;
    long step_count = 0;
    rec.verdict = Verdict::CompletedHorizon;
    while (t < horizon * (1.0 - 1e-14)) {
        double dt = policy.dt0;
        if (policy.adapt) {
            const double rate = std::pow(norm_linf(psi), params.p - 2.0);
            dt = policy.dt0 / (1.0 + rate / rate0);
        }
        if (dt < policy.dt_floor) {
            rec.verdict = Verdict::DtUnderflow;
            break;
        }
        dt = std::min(dt, horizon - t);
        stepper.step(psi, dt);
        t += dt;
        ++step_count;
        if (step_count % policy.monitor_every == 0 || t >= horizon * (1.0 - 1e-14)) {
            const double g1 = sample(t);
            if (g1 > policy.blowup_gradient_factor * grad0) {
                rec.verdict = Verdict::BlowupDetected;
                break;
            }
        }
    }
    if (policy.keep_snapshots) rec.snapshots.push_back(psi);
    return rec;
}

Field evolve_snapshot(const Field& psi0, double horizon, const StepPolicy& policy,
                      const ModelParams& params) {
    StepPolicy p = policy;
    p.keep_snapshots = true;
    TrajectoryRecord rec = evolve(psi0, horizon, p, params);
    return rec.snapshots.back();
}

} // namespace fracwave
