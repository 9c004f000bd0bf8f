#include "fracwave/evolution.hpp"
#include "fracwave/groundstate.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace fracwave;
using namespace fracwave::testutil;

namespace {
double l2_dist(const Field& a, const Field& b) { return std::sqrt(mass(a - b)); }
} // namespace

TEST_CASE("policy validation") {
    StepPolicy p;
    CHECK_NOTHROW(p.validate());
    p.dt0 = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = StepPolicy{};
    p.dt_floor = 1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = StepPolicy{};
    p.blowup_gradient_factor = 1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = StepPolicy{};
    p.monitor_every = 0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("linear step: unitary, group law, identity at dt = 0") {
    GridSpec g(1, 256, 30.0);
    ModelParams params(0.75, 0.5, 3.0, 1);
    std::mt19937_64 rng(13);
    Field psi = random_decaying_field(g, rng, 2.0, true);

    Field out = linear_step(psi, 0.37, params);
    CHECK(mass(out) == doctest::Approx(mass(psi)).epsilon(1e-13));

    Field two = linear_step(linear_step(psi, 0.3, params), 0.7, params);
    Field one = linear_step(psi, 1.0, params);
    CHECK(l2_dist(two, one) < 1e-12 * std::sqrt(mass(one)));

    Field id = linear_step(psi, 0.0, params);
    CHECK(l2_dist(id, psi) < 1e-13 * std::sqrt(mass(psi)));

    // inverse direction undoes the flow
    Field back = linear_step(out, -0.37, params);
    CHECK(l2_dist(back, psi) < 1e-12 * std::sqrt(mass(psi)));
}

TEST_CASE("nonlinear step: modulus preserving and additive in dt") {
    GridSpec g(1, 256, 30.0);
    std::mt19937_64 rng(19);
    Field psi = random_decaying_field(g, rng, 2.0, true);

    Field out = nonlinear_step(psi, 0.2, 4.0);
    for (std::size_t i = 0; i < psi.size(); ++i)
        CHECK(std::abs(std::abs(out.values[i]) - std::abs(psi.values[i])) < 1e-14);

    Field split = nonlinear_step(nonlinear_step(psi, 0.12, 4.0), 0.08, 4.0);
    CHECK(l2_dist(split, out) < 1e-13 * std::sqrt(mass(psi)));

    Field id = nonlinear_step(psi, 0.0, 4.0);
    for (std::size_t i = 0; i < psi.size(); ++i) CHECK(id.values[i] == psi.values[i]);
}

TEST_CASE("composed step conserves mass") {
    GridSpec g(1, 256, 30.0);
    ModelParams params(0.75, 0.5, 6.0, 1);
    std::mt19937_64 rng(23);
    Field psi = random_decaying_field(g, rng, 2.0, true);
    Field out = strang_step(psi, 1e-2, params);
    CHECK(mass(out) == doctest::Approx(mass(psi)).epsilon(1e-13));
}

TEST_CASE("second-order convergence in the step size") {
    GridSpec g(1, 256, 30.0);
    ModelParams params(0.75, 0.5, 3.0, 1);
    Field psi0 = gaussian(g, 1.0, 1.2);

    auto run = [&](double dt) {
        StepPolicy pol;
        pol.dt0 = dt;
        return evolve_snapshot(psi0, 0.5, pol, params);
    };
    Field f4 = run(4e-3), f2 = run(2e-3), f1 = run(1e-3);
    const double e4 = l2_dist(f4, f2);
    const double e2 = l2_dist(f2, f1);
    const double ratio = e4 / e2;
    CHECK(ratio > 4.0 * 0.85);
    CHECK(ratio < 4.0 * 1.15);
}

TEST_CASE("time reversal by conjugation") {
    GridSpec g(1, 256, 30.0);
    ModelParams params(0.75, 0.5, 3.0, 1);
    Field psi0 = gaussian(g, 1.0, 1.0);
    StepPolicy pol;
    pol.dt0 = 1e-3;

    Field fwd = evolve_snapshot(psi0, 0.4, pol, params);
    for (complex& z : fwd.values) z = std::conj(z);
    Field back = evolve_snapshot(fwd, 0.4, pol, params);
    for (complex& z : back.values) z = std::conj(z);
    CHECK(l2_dist(back, psi0) < 1e-9 * std::sqrt(mass(psi0)));
}

TEST_CASE("ground state evolves as a standing wave") {
    ModelParams params(0.75, 0.5, 6.0, 1);
    GridSpec g(1, 512, 60.0);
    GroundStateRecord rec = solve_mixed_fixed_lambda(params, 1.0, g);
    REQUIRE(rec.converged);

    // Raw splitting steps: the trajectory driver's dealias filter would clip
    // the state's spectral tail at this resolution and mask the O(dt^2) law.
    const double dt = 2.5e-4;
    const int steps = 4000;
    const double T = dt * steps;
    Field psi = rec.field;
    for (int k = 0; k < steps; ++k) psi = strang_step(psi, dt, params);
    const complex rot(std::cos(rec.lambda * T), std::sin(rec.lambda * T));
    double err = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i)
        err = std::max(err, std::abs(psi.values[i] - rot * rec.field.values[i]));
    CHECK(err <= 1e-4 * norm_linf(rec.field));
}

TEST_CASE("trajectory record bookkeeping and invariants") {
    GridSpec g(1, 256, 30.0);
    ModelParams params(0.75, 0.5, 6.0, 1);
    Field psi0 = gaussian(g, 1.0, 0.8);
    StepPolicy pol;
    pol.dt0 = 1e-3;
    pol.monitor_every = 20;
    pol.keep_snapshots = true;

    TrajectoryRecord rec = evolve(psi0, 1.0, pol, params);
    CHECK(rec.verdict == Verdict::CompletedHorizon);
    REQUIRE(!rec.times.empty());
    CHECK(rec.times.front() == 0.0);
    CHECK(rec.times.back() == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(rec.mass_series.size() == rec.times.size());
    REQUIRE(rec.energy_series.size() == rec.times.size());
    REQUIRE(rec.snapshots.size() >= 2);

    const double m0 = rec.mass_series.front();
    const double e0 = rec.energy_series.front();
    for (std::size_t i = 0; i < rec.times.size(); ++i) {
        CHECK(std::abs(rec.mass_series[i] - m0) <= 1e-10 * m0);
        CHECK(std::abs(rec.energy_series[i] - e0) <= 1e-6 * (1.0 + std::abs(e0)));
    }

    CHECK_THROWS_AS(evolve(psi0, 1.0, pol, ModelParams(0.75, 0.5, 6.0, 2)),
                    std::invalid_argument);
}

TEST_CASE("focusing data trips the gradient guard") {
    GridSpec g(1, 256, 30.0);
    ModelParams params(0.75, 0.5, 6.0, 1);
    Field psi0 = gaussian(g, 1.0, 3.0);
    StepPolicy pol;
    pol.dt0 = 1e-3;
    pol.adapt = true;
    pol.blowup_gradient_factor = 3.0;
    pol.monitor_every = 5;

    TrajectoryRecord rec = evolve(psi0, 5.0, pol, params);
    CHECK(rec.verdict == Verdict::BlowupDetected);
    CHECK(rec.grad_s1_series.back() > 3.0 * rec.grad_s1_series.front());
    CHECK(std::string(to_string(rec.verdict)) == "BlowupDetected");
}

TEST_CASE("step underflow is reported, not looped on") {
    GridSpec g(1, 256, 30.0);
    ModelParams params(0.75, 0.5, 6.0, 1);
    Field psi0 = gaussian(g, 1.0, 3.0);
    StepPolicy pol;
    pol.dt0 = 1e-3;
    pol.adapt = true;
    pol.dt_floor = 0.9e-3; // any focusing at all drops dt below the floor
    pol.blowup_gradient_factor = 1e9;

    TrajectoryRecord rec = evolve(psi0, 5.0, pol, params);
    CHECK(rec.verdict == Verdict::DtUnderflow);
    CHECK(rec.times.back() < 5.0);
}
