#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "epspectra/ep_dynamics.hpp"
#include "epspectra/evolution.hpp"
#include "epspectra/field.hpp"
#include "epspectra/initial_data.hpp"
#include "epspectra/littlewood_paley.hpp"
#include "epspectra/spectral_ops.hpp"
#include "oracles.hpp"

using namespace epspectra;

namespace {

double max_component_diff(const VectorField& a, const VectorField& b) {
    double m = 0.0;
    for (int c = 0; c < a.size(); ++c)
        for (std::size_t i = 0; i < a.grid().total_points(); ++i)
            m = std::max(m, std::abs(a[c].samples()[i] - b[c].samples()[i]));
    return m;
}

}  // namespace

TEST_CASE("one step agrees with a longhand reference integrator") {
    const PeriodicGrid g(1, 64);
    const auto u0 = random_bandlimited_velocity(g, 10, 0.4, 2.0, 15);
    SolverConfig cfg;
    cfg.dt = 0.05;
    const auto got = rk4_step(u0, cfg.dt, cfg);

    auto rhs = [&](const std::vector<double>& y) {
        const auto u = VectorField(std::vector<ScalarField>{
            ScalarField::from_samples(g, y)});
        return ep_rhs(u, cfg.dealias_fraction)[0].samples();
    };
    const auto want = oracle::rk4_reference(u0[0].samples(), cfg.dt, 1, rhs);
    for (std::size_t i = 0; i < g.total_points(); ++i)
        CHECK(got[0].samples()[i] == doctest::Approx(want[i]).epsilon(1e-11));
}

TEST_CASE("step refuses an advectively unstable dt") {
    const PeriodicGrid g(1, 64);
    const auto one = ScalarField::from_samples(
        g, std::vector<double>(g.total_points(), 1.0));
    const VectorField u(std::vector<ScalarField>{one});
    SolverConfig cfg;
    try {
        rk4_step(u, 1.0, cfg);
        FAIL("expected CflViolation");
    } catch (const CflViolation& e) {
        CHECK(e.suggested_dt == 0.5);
    }
    SolverConfig run = cfg;
    run.dt = 1.0;
    run.t_final = 2.0;
    CHECK_THROWS_AS(solve(u, run), CflViolation);
}

TEST_CASE("time stepping converges at fourth order") {
    const PeriodicGrid g(1, 64);
    const auto u0 = random_bandlimited_velocity(g, 8, 0.4, 2.0, 5);
    auto run = [&](double dt) {
        SolverConfig cfg;
        cfg.dt = dt;
        cfg.t_final = 0.4;
        return solve(u0, cfg).final_state();
    };
    const auto ref = run(0.0125);
    const double e1 = lp_norm(run(0.05) - ref, 2.0);
    const double e2 = lp_norm(run(0.025) - ref, 2.0);
    REQUIRE(e2 > 1e-14);  // above round-off, the order estimate means something
    const double order = std::log2(e1 / e2);
    CHECK(order > 3.5);
    CHECK(order < 4.8);
}

TEST_CASE("energy is conserved on smooth data") {
    const PeriodicGrid g(1, 256);
    const auto u0 = random_bandlimited_velocity(g, 30, 0.3, 2.5, 77);
    SolverConfig cfg;
    cfg.dt = 0.01;
    cfg.t_final = 0.5;
    const auto traj = solve(u0, cfg);
    const double e0 = traj.diagnostics.front().energy;
    const double eT = traj.diagnostics.back().energy;
    REQUIRE(e0 > 0.0);
    CHECK(std::abs(eT - e0) / e0 < 1e-6);
}

TEST_CASE("integration is bitwise reproducible") {
    const PeriodicGrid g(1, 64);
    const auto u0 = random_bandlimited_velocity(g, 10, 0.5, 2.0, 123);
    SolverConfig cfg;
    cfg.dt = 0.05;
    cfg.t_final = 0.5;
    const auto a = solve(u0, cfg).final_state();
    const auto b = solve(u0, cfg).final_state();
    CHECK(max_component_diff(a, b) == 0.0);
}

TEST_CASE("snapshots land on requested step multiples") {
    const PeriodicGrid g(1, 64);
    const auto u0 = random_bandlimited_velocity(g, 8, 0.3, 2.0, 9);
    SolverConfig cfg;
    cfg.dt = 0.025;
    cfg.t_final = 0.1;
    cfg.snapshot_times = {0.05, 0.1};
    const auto traj = solve(u0, cfg);
    REQUIRE(traj.times.size() == 3);
    CHECK(traj.times[0] == 0.0);
    CHECK(traj.times[1] == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(traj.times[2] == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(max_component_diff(traj.state_at(0.0), u0) == 0.0);
    CHECK_NOTHROW(traj.state_at(0.05));
    CHECK_THROWS_AS(traj.state_at(0.03), std::out_of_range);
    CHECK(traj.end_time() == doctest::Approx(0.1).epsilon(1e-12));

    SolverConfig bad = cfg;
    bad.snapshot_times = {0.037};
    CHECK_THROWS_AS(solve(u0, bad), std::invalid_argument);
    SolverConfig off = cfg;
    off.t_final = 0.11;
    CHECK_THROWS_AS(solve(u0, off), std::invalid_argument);
}

TEST_CASE("diagnostics follow the stride and always include the endpoint") {
    const PeriodicGrid g(1, 64);
    const auto u0 = random_bandlimited_velocity(g, 8, 0.3, 2.0, 10);
    SolverConfig cfg;
    cfg.dt = 0.05;
    cfg.t_final = 0.5;  // 10 steps
    cfg.diag_stride = 3;
    const auto traj = solve(u0, cfg);
    REQUIRE(traj.diagnostics.size() == 5);  // steps 0, 3, 6, 9, 10
    CHECK(traj.diagnostics.back().t == doctest::Approx(0.5).epsilon(1e-12));
    for (const auto& row : traj.diagnostics) {
        CHECK(row.f_norm > 0.0);
        CHECK(row.energy > 0.0);
        CHECK(row.grad_linf >= 0.0);
    }
    const auto csv = trajectory_csv(traj);
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "t,f_norm,besov_low,grad_linf,energy");
    int rows = 0;
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) ++rows;
    CHECK(rows == 5);
}

TEST_CASE("gradient guard converts runaway growth into a typed stop") {
    const PeriodicGrid g(1, 64);
    const auto part = DyadicPartition::build(g);
    const auto u0 = random_bandlimited_velocity(g, 8, 0.5, 2.0, 44);
    SolverConfig cfg;
    cfg.dt = 0.05;
    cfg.t_final = 0.5;
    cfg.blowup_threshold = 1e-9;  // guaranteed trip on the first step
    const auto outcome = try_solve(u0, cfg, part);
    REQUIRE(outcome.blowup.has_value());
    CHECK(outcome.blowup->time == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(outcome.blowup->gradient_norm > 1e-9);
    // only the clean prefix is kept
    REQUIRE(outcome.trajectory.states.size() == 1);
    CHECK(outcome.trajectory.times[0] == 0.0);
    CHECK_THROWS_AS(solve(u0, cfg, part), BlowupDetected);

    SolverConfig ok = cfg;
    ok.blowup_threshold = 0.0;  // auto threshold clears smooth data
    CHECK(!try_solve(u0, ok, part).blowup.has_value());
}

TEST_CASE("first frozen-coefficient iterate transports nothing") {
    const PeriodicGrid g(1, 128);
    const auto part = DyadicPartition::build(g);
    const auto u0 = random_bandlimited_velocity(g, 40, 0.25, 2.0, 3);
    SolverConfig cfg;
    cfg.dt = 0.025;
    cfg.t_final = 0.25;
    const auto iterates = picard_solve(u0, 2, cfg, part);
    REQUIRE(iterates.size() == 2);
    // frozen coefficient u^0 = 0: u^1 stays at its initial slice exactly
    const auto& first = iterates[0];
    CHECK(max_component_diff(first.final_state(),
                             low_pass(u0, 1, part)) == 0.0);
    // the second iterate starts from the wider slice and actually moves
    CHECK(max_component_diff(iterates[1].state_at(0.0),
                             low_pass(u0, 2, part)) == 0.0);
    CHECK(max_component_diff(iterates[1].final_state(),
                             iterates[1].state_at(0.0)) > 0.0);
}

TEST_CASE("frozen-coefficient scheme validates its inputs") {
    const PeriodicGrid g(1, 64);
    const auto part = DyadicPartition::build(g);
    const auto u0 = random_bandlimited_velocity(g, 8, 0.3, 2.0, 6);
    SolverConfig cfg;
    cfg.dt = 0.05;
    cfg.t_final = 0.1;  // 2 steps: not enough for the midpoint stencil
    CHECK_THROWS_AS(picard_solve(u0, 2, cfg, part), std::invalid_argument);
    cfg.t_final = 0.25;
    CHECK_THROWS_AS(picard_solve(u0, 0, cfg, part), std::invalid_argument);
}

TEST_CASE("successive iterate gaps are computed pairwise at the endpoint") {
    const PeriodicGrid g(1, 128);
    const auto part = DyadicPartition::build(g);
    const auto u0 = random_bandlimited_velocity(g, 40, 0.25, 2.5, 21);
    SolverConfig cfg;
    cfg.dt = 0.025;
    cfg.t_final = 0.25;
    const auto iterates = picard_solve(u0, 4, cfg, part);
    const auto lowered = SpaceParams::besov(1.0, 2.0,
                                            std::numeric_limits<double>::infinity());
    const auto gaps = cauchy_diagnostic(iterates, 1, lowered, part);
    REQUIRE(gaps.size() == 3);
    const auto direct = besov_norm(iterates[1].final_state() -
                                   iterates[0].final_state(), lowered, part);
    CHECK(gaps[0] == doctest::Approx(direct).epsilon(1e-13));
    const auto wide = cauchy_diagnostic(iterates, 3, lowered, part);
    REQUIRE(wide.size() == 1);
    CHECK_THROWS_AS(cauchy_diagnostic(iterates, 0, lowered, part), std::invalid_argument);
    CHECK_THROWS_AS(cauchy_diagnostic(iterates, 4, lowered, part), std::invalid_argument);
}
