#include "fracwave/groundstate.hpp"

#include "fracwave/fft.hpp"
#include "fracwave/kernels.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace fracwave {

namespace {

constexpr int kMaxIter = 5000;

void check_seed(const Field& seed) {
    double amax = 0.0;
    for (const complex& z : seed.values) amax = std::max(amax, std::abs(z));
    if (!(amax > 0.0)) throw SolverError("NegativeSeed: seed is identically zero");
    // Reject genuinely sign-changing or complex seeds, but tolerate small
    // oscillatory tails from warm starts (those are clamped to zero below).
    for (const complex& z : seed.values)
        if (z.real() < -1e-3 * amax || std::abs(z.imag()) > 1e-9 * amax)
            throw SolverError("NegativeSeed: seed must be real and nonnegative");
}

// Petviashvili fixed point for K u = |u|^{p-2} u with spectral operator K.
GroundStateRecord petviashvili(const SpectralMultiplier& K, double p, const Field& seed) {
    check_seed(seed);
    const GridSpec& g = K.grid;
    const double gamma = (p - 1.0) / (p - 2.0);
    const double spec_scale = g.cell_volume() / static_cast<double>(g.size());

    Field u = recenter(seed);
    for (complex& z : u.values) z = complex(std::max(z.real(), 0.0), 0.0);

    GroundStateRecord rec;
    double residual = 1.0;
    double stale_residual = std::numeric_limits<double>::infinity();
    int iter = 0;
    for (; iter < kMaxIter; ++iter) {
        // Nonlinearity |u|^{p-2} u, and its transform.
        Field w(g);
        for (std::size_t i = 0; i < u.size(); ++i) {
            const double a = std::abs(u.values[i]);
            w.values[i] = std::pow(a, p - 2.0) * u.values[i];
        }
        Field uhat = to_spectral(u);
        Field what = to_spectral(w);

        // <K u, u> and <|u|^{p-2} u, u> for the stabilizing factor.
        const double num = spec_scale * kernels::sum_weighted_abs2(uhat.values, K.symbol);
        const double den = lp_integral(u, p);
        if (!(den > 0.0)) throw NonConvergenceError("Petviashvili: iterate collapsed to zero");
        const double S = std::pow(num / den, gamma);

        // Residual of the stationary equation, relative to the scale of K u so
        // the tolerance is meaningful for any lambda.
        double res2 = 0.0, ku2 = 0.0;
        for (std::size_t i = 0; i < uhat.size(); ++i) {
            const complex ku = K.symbol[i] * uhat.values[i];
            res2 += std::norm(ku - what.values[i]);
            ku2 += std::norm(ku);
        }
        residual = std::sqrt(res2 / ku2);
        if (residual <= 1e-10 && iter > 0) break;
        // Fail fast on stagnation instead of burning the full budget.
        if (iter > 0 && iter % 500 == 0) {
            if (residual > 0.5 * stale_residual) {
                std::ostringstream os;
                os << "Petviashvili: stagnated after " << iter
                   << " iterations, residual = " << residual;
                throw NonConvergenceError(os.str());
            }
            stale_residual = residual;
        }

        // Next iterate: S^gamma K^{-1} (|u|^{p-2} u).
        Field next(g);
        for (std::size_t i = 0; i < next.size(); ++i)
            next.values[i] = S * what.values[i] / K.symbol[i];
        fft_inverse(g, next.values);
        for (complex& z : next.values) z = complex(z.real(), 0.0);
        u = recenter(next);
    }

    rec.field = u;
    rec.mass = mass(u);
    rec.el_residual = residual;
    rec.iterations = iter;
    rec.converged = residual <= 1e-9;
    if (!rec.converged) {
        std::ostringstream os;
        os << "Petviashvili: no convergence after " << iter
           << " iterations, residual = " << residual << ", ||u||_2^2 = " << rec.mass;
        throw NonConvergenceError(os.str());
    }
    return rec;
}

} // namespace

Field gaussian_seed(const GridSpec& grid, double width, double amplitude) {
    Field u(grid);
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double r = radius_at(grid, i);
        u.values[i] = amplitude * std::exp(-0.5 * r * r / (width * width));
    }
    return u;
}

GroundStateRecord solve_single_fractional(double s1, double p, const GridSpec& grid,
                                          const std::optional<Field>& seed) {
    const int N = grid.dim;
    if (N > 2.0 * s1 && !(p < 2.0 * N / (N - 2.0 * s1)))
        throw std::invalid_argument("solve_single_fractional: p outside the subcritical range");
    SpectralMultiplier K = build_fractional_symbol(grid, s1);
    for (double& v : K.symbol) v += 1.0;

    GroundStateRecord rec = petviashvili(K, p, seed ? *seed : gaussian_seed(grid));
    rec.lambda = 1.0;
    rec.tri.a1 = seminorm_sq(rec.field, s1);
    rec.tri.a2 = 0.0;
    rec.tri.b = lp_integral(rec.field, p);
    rec.energy = 0.5 * rec.tri.a1 - rec.tri.b / p;
    const double q = s1 * rec.tri.a1 - N * (p - 2.0) / (2.0 * p) * rec.tri.b;
    rec.q_residual = std::abs(q) / (s1 * rec.tri.a1);
    return rec;
}

GroundStateRecord solve_mixed_fixed_lambda(const ModelParams& params, double lambda,
                                           const GridSpec& grid,
                                           const std::optional<Field>& seed) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("solve_mixed_fixed_lambda: lambda must be positive");
    if (grid.dim != params.N)
        throw std::invalid_argument("solve_mixed_fixed_lambda: grid dimension mismatch");
    const SpectralMultiplier K = build_mixed_symbol(grid, params.s1, params.s2, lambda);

    GroundStateRecord rec = petviashvili(K, params.p, seed ? *seed : gaussian_seed(grid));
    rec.lambda = lambda;
    rec.tri = triple(rec.field, params);
    rec.energy = energy(rec.tri, params);
    rec.q_residual = std::abs(pohozaev_q(rec.tri, params)) /
                     (params.s1 * rec.tri.a1 + params.s2 * rec.tri.a2);
    return rec;
}

namespace {

// Petviashvili on the torus also admits delocalized fixed points (the wide
// state flattens to a constant when the box is too small). Those are not
// ground states; the shooting scan must skip them.
bool is_localized(const Field& u) {
    double amax = 0.0;
    for (const complex& z : u.values) amax = std::max(amax, std::abs(z));
    return std::abs(u.values[0]) <= 0.1 * amax;
}

} // namespace

GroundStateRecord mass_shoot(const ModelParams& params, double c, const GridSpec& grid,
                             double lam_lo, double lam_hi) {
    if (!(c > 0.0)) throw std::invalid_argument("mass_shoot: c must be positive");
    if (!(0.0 < lam_lo && lam_lo < lam_hi))
        throw std::invalid_argument("mass_shoot: need 0 < lam_lo < lam_hi");

    // Coarse log scan over lambda, warm-started left to right. Solves that
    // fail (e.g. states the grid cannot resolve) are skipped.
    constexpr int kScan = 25;
    std::vector<double> lams(kScan), masses(kScan, std::numeric_limits<double>::quiet_NaN());
    std::optional<Field> warm;
    const double llo = std::log10(lam_lo), lhi = std::log10(lam_hi);
    for (int i = 0; i < kScan; ++i) {
        lams[i] = std::pow(10.0, llo + (lhi - llo) * i / (kScan - 1.0));
        try {
            GroundStateRecord r = solve_mixed_fixed_lambda(params, lams[i], grid, warm);
            if (!is_localized(r.field)) {
                warm.reset();
                continue;
            }
            masses[i] = r.mass;
            warm = r.field;
            if (std::abs(r.mass - c) / c <= 1e-6) return r;
        } catch (const SolverError&) {
            warm.reset();
        }
    }

    // Prefer the rightmost bracket: wide states near the lower lambda edge can
    // be box-truncated, which bends the mass curve and creates spurious
    // crossings there.
    int bracket = -1;
    for (int i = kScan - 2; i >= 0; --i)
        if (std::isfinite(masses[i]) && std::isfinite(masses[i + 1]) &&
            (masses[i] - c) * (masses[i + 1] - c) < 0.0) {
            bracket = i;
            break;
        }
    if (bracket < 0) {
        std::ostringstream os;
        os << "MassUnreachable: c = " << c << " not bracketed; scanned (lambda, mass):";
        for (int i = 0; i < kScan; ++i) os << " (" << lams[i] << ", " << masses[i] << ")";
        throw MassUnreachableError(os.str());
    }

    // Bracketed secant on log(lambda), falling back to bisection whenever the
    // secant proposal leaves the bracket or fails to shrink it.
    double la = std::log(lams[bracket]), fa = masses[bracket] - c;
    double lb = std::log(lams[bracket + 1]), fb = masses[bracket + 1] - c;
    GroundStateRecord best;
    for (int it = 0; it < 80; ++it) {
        // Alternate secant with plain bisection so the bracket provably shrinks.
        double lm = la - fa * (lb - la) / (fb - fa);
        const double width = lb - la;
        if (it % 2 == 1 || !std::isfinite(lm) || lm <= la + 1e-3 * width ||
            lm >= lb - 1e-3 * width)
            lm = 0.5 * (la + lb);
        GroundStateRecord r = [&] {
            try {
                return solve_mixed_fixed_lambda(params, std::exp(lm), grid, warm);
            } catch (const SolverError&) {
                // warm start went stale (sign-changing tail or stagnation);
                // retry cold before giving up on this lambda
                warm.reset();
                return solve_mixed_fixed_lambda(params, std::exp(lm), grid);
            }
        }();
        if (!is_localized(r.field))
            throw MassUnreachableError("MassUnreachable: iterate delocalized inside the bracket");
        warm = r.field;
        if (std::abs(r.mass - c) / c <= 1e-6) return r;
        if ((r.mass - c) * fa > 0.0) {
            la = lm;
            fa = r.mass - c;
        } else {
            lb = lm;
            fb = r.mass - c;
        }
        best = r;
    }
    std::ostringstream os;
    os << "MassUnreachable: iteration stalled at mass = " << best.mass << " for c = " << c;
    throw MassUnreachableError(os.str());
}

GammaBranch gamma_branch(const ModelParams& params, const std::vector<double>& c_list,
                         const GridSpec& grid) {
    GammaBranch branch{params, {}};
    std::vector<double> cs = c_list;
    std::sort(cs.begin(), cs.end());
    for (double c : cs) {
        try {
            GroundStateRecord r = mass_shoot(params, c, grid);
            branch.samples.push_back({c, r.energy, r.lambda, r.q_residual, r.el_residual, true});
        } catch (const MassUnreachableError&) {
            branch.samples.push_back({c, 0.0, 0.0, 0.0, 0.0, false});
        }
    }
    return branch;
}

double radial_profile_violation(const Field& u) {
    const GridSpec& g = u.grid;
    const int n = g.n_per_axis;
    const int c = n / 2;
    double worst = 0.0;
    auto flat = [&](const int ix[3]) {
        std::size_t idx = 0;
        for (int a = 0; a < g.dim; ++a) idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(ix[a]);
        return idx;
    };
    // Walk outward along each +/- axis direction from the center.
    for (int axis = 0; axis < g.dim; ++axis)
        for (int dir : {+1, -1}) {
            int ix[3] = {c, c, c};
            double running_min = std::abs(u.values[flat(ix)]);
            for (int step = 1; step < n / 2; ++step) {
                ix[axis] = c + dir * step;
                if (ix[axis] < 0 || ix[axis] >= n) break;
                const double v = std::abs(u.values[flat(ix)]);
                worst = std::max(worst, v - running_min);
                running_min = std::min(running_min, v);
            }
        }
    return worst;
}

} // namespace fracwave
