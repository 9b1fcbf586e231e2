#include <cmath>
#include <vector>

#include "doctest.h"
#include "hcflow/flow.hpp"
#include "hcflow/io.hpp"

using namespace hcflow;

namespace {

FlowConfig interval_config(int nodes, double sigma = 0.5, double epsilon = 0.01) {
    return FlowConfig(CurvatureSpec(1, 1, 0),
                      Grid(DomainSpec(DomainMode::interval, 1, 1.0), nodes), sigma, epsilon);
}

}  // namespace

TEST_CASE("initial surface: stationary cap satisfies every hypothesis") {
    const FlowConfig config = interval_config(201);
    InitialCheck check;
    const FlowState s = initial_surface(config, {InitialKind::stationary_cap, 0.0, 0.0}, &check);
    CHECK(check.f_le_sigma);
    CHECK(check.parabolicity);
    CHECK(check.gradient_strict);
    CHECK(std::fabs(check.max_F - 0.5) < 1e-3);
    CHECK(s.u.front() == 0.01);
    CHECK(s.u.back() == 0.01);
}

TEST_CASE("initial surface: subcritical cap geometry") {
    const FlowConfig config = interval_config(201);
    InitialCheck check;
    const FlowState s =
        initial_surface(config, {InitialKind::subcritical_cap, 0.4, 0.0}, &check);
    CHECK(s.u.front() == 0.01);

    // f(kappa) is sigma' up to discretization
    CHECK(std::fabs(check.max_F - 0.4) < 1e-3);
    CHECK(check.f_le_sigma);
    CHECK(check.parabolicity);

    // truncation bounds the slope by 1/sigma' (not 1/sigma: a surface with
    // f strictly below sigma is necessarily steeper than 1/sigma near the
    // epsilon-boundary, so the strict hypothesis flag must be off here)
    CHECK(check.max_w < 1.0 / 0.4);
    CHECK(check.max_w > 1.0 / 0.5);
    CHECK_FALSE(check.gradient_strict);

    // frozen closed form for the boundary slope of the truncated cap
    const Cap cap = Cap::with_boundary_value(0.4, 1.0, 0.01);
    const double w_boundary = cap.w(1.0);
    CHECK(w_boundary == doctest::Approx(2.44424204553845).epsilon(1e-10));
    // max_w uses one-sided boundary differences, O(h^2) with a steep-cap constant
    CHECK(check.max_w == doctest::Approx(w_boundary).epsilon(5e-3));
}

TEST_CASE("initial surface rejections") {
    const FlowConfig config = interval_config(101);
    CHECK_THROWS_AS(initial_surface(config, {InitialKind::horosphere, 0.0, 0.0}),
                    InadmissibleInitialData);
    CHECK_THROWS_AS(initial_surface(config, {InitialKind::subcritical_cap, 0.6, 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(initial_surface(config, {InitialKind::subcritical_cap, 0.5, 0.0}),
                    std::invalid_argument);

    try {
        initial_surface(config, {InitialKind::horosphere, 0.0, 0.0});
        CHECK(false);
    } catch (const InadmissibleInitialData& e) {
        CHECK(e.quantity == "f(kappa)");
        CHECK(e.value == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(e.node >= 0);
    }
}

TEST_CASE("perturbed cap with zero amplitude equals the subcritical cap") {
    const FlowConfig config = interval_config(101);
    const FlowState a = initial_surface(config, {InitialKind::subcritical_cap, 0.4, 0.0});
    const FlowState b = initial_surface(config, {InitialKind::perturbed_cap, 0.4, 0.0});
    for (std::size_t i = 0; i < a.u.size(); ++i) CHECK(a.u[i] == b.u[i]);
}

TEST_CASE("step: stationary cap is a quasi-fixed point") {
    const FlowConfig config = interval_config(201);
    const FlowState s = initial_surface(config, {InitialKind::stationary_cap, 0.0, 0.0});
    const auto [next, rep] = step(s, config);
    CHECK(rep.max_ut < 1e-3);  // O(h^2) discrete residual
    double dmax = 0.0;
    for (std::size_t i = 0; i < s.u.size(); ++i)
        dmax = std::max(dmax, std::fabs(next.u[i] - s.u[i]));
    CHECK(dmax < rep.dt * 1e-3 + 1e-15);
}

TEST_CASE("step: subcritical cap moves strictly down in the interior") {
    const FlowConfig config = interval_config(101);
    const FlowState s = initial_surface(config, {InitialKind::subcritical_cap, 0.4, 0.0});
    const auto [next, rep] = step(s, config);
    CHECK(rep.max_F_minus_sigma < 0.0);
    for (int j = 1; j < 100; ++j) {
        const std::size_t ij = static_cast<std::size_t>(j);
        CHECK(next.u[ij] < s.u[ij]);
    }
    CHECK(next.u.front() == 0.01);
    CHECK(next.u.back() == 0.01);
}

TEST_CASE("step: dt -> 0 consistency") {
    FlowConfig config = interval_config(101);
    config.dt_max = 1e-9;
    const FlowState s = initial_surface(config, {InitialKind::subcritical_cap, 0.4, 0.0});
    const auto [next, rep] = step(s, config);
    CHECK(rep.dt <= 1e-9);
    double dmax = 0.0;
    for (std::size_t i = 0; i < s.u.size(); ++i)
        dmax = std::max(dmax, std::fabs(next.u[i] - s.u[i]));
    CHECK(dmax <= rep.dt * rep.max_ut * 1.0001 + 1e-18);
}

TEST_CASE("halving driver") {
    int calls = 0;
    CHECK(attempt_with_halvings(1.0, 20, [&](double) {
              ++calls;
              return false;
          }) == 0.0);
    CHECK(calls == 21);

    CHECK(attempt_with_halvings(1.0, 20, [](double) { return true; }) == 1.0);
    CHECK(attempt_with_halvings(1.0, 20, [](double dt) { return dt <= 0.25; }) == 0.25);
}

TEST_CASE("run to stationarity: stationary cap terminates immediately at moderate h") {
    FlowConfig config = interval_config(201);
    config.stat_tol = 1e-3;  // above the O(h^2) discrete residual
    const RunResult run = run_to_stationary(config, {InitialKind::stationary_cap, 0.0, 0.0});
    CHECK(run.converged);
    CHECK(run.steps == 0);
    CHECK(run.final_residual < 1e-3);
}

TEST_CASE("run to stationarity: subcritical cap converges to the sigma cap") {
    FlowConfig config = interval_config(101);
    config.stat_tol = 1e-5;
    const RunResult run = run_to_stationary(config, {InitialKind::subcritical_cap, 0.4, 0.0});
    CHECK(run.converged);
    CHECK(run.final_residual < 1e-5);
    CHECK(run.t_final < config.t_end);

    // discrete stationary state vs closed-form sigma cap: O(h^2)
    const Cap cap = Cap::with_boundary_value(0.5, 1.0, 0.01);
    double err = 0.0;
    for (int j = 0; j < config.grid.node_count; ++j)
        err = std::max(err, std::fabs(run.final_state.u[static_cast<std::size_t>(j)] -
                                      cap.height(std::fabs(config.grid.coordinate(j)))));
    CHECK(err <= 10.0 * config.grid.h * config.grid.h + 1e-4);

    // boundary pinned bit-exactly, monotone decrease step by step
    CHECK(run.final_state.u.front() == 0.01);
    CHECK(run.final_state.u.back() == 0.01);
    for (const auto& row : run.rows) CHECK(row.monotone_ok);

    // the accumulated motion integral telescopes to u(0) - u(t) exactly
    for (std::size_t i = 1; i + 1 < run.initial_u.size(); ++i) {
        const double telescoped = run.initial_u[i] - run.final_state.u[i];
        CHECK(run.cumulative_integral[i] == doctest::Approx(telescoped).epsilon(1e-10));
    }
}

TEST_CASE("trajectories are bit-deterministic") {
    FlowConfig config = interval_config(101);
    config.stat_tol = 1e-4;
    const InitialSpec init{InitialKind::subcritical_cap, 0.4, 0.0};
    const RunResult a = run_to_stationary(config, init);
    const RunResult b = run_to_stationary(config, init);
    CHECK(a.rows.size() == b.rows.size());
    CHECK(a.t_final == b.t_final);
    for (std::size_t i = 0; i < a.final_state.u.size(); ++i)
        CHECK(a.final_state.u[i] == b.final_state.u[i]);
}

TEST_CASE("non-convergence is reported, not thrown") {
    FlowConfig config = interval_config(101);
    config.t_end = 1e-3;
    const RunResult run = run_to_stationary(config, {InitialKind::subcritical_cap, 0.4, 0.0});
    CHECK_FALSE(run.converged);
    CHECK_FALSE(run.step_failed);
    CHECK(run.t_final >= config.t_end - 1e-12);
    CHECK(flow_exit_code(true, run.converged, true) == 4);
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(interval_config(101, 0.5, 0.2).validate(), std::invalid_argument);
    CHECK_THROWS_AS(interval_config(101, 1.5).validate(), std::invalid_argument);
    FlowConfig bad = interval_config(101);
    bad.safety = 1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    FlowConfig mismatched(CurvatureSpec(2, 1, 0),
                          Grid(DomainSpec(DomainMode::interval, 1, 1.0), 101), 0.5, 0.01);
    CHECK_THROWS_AS(mismatched.validate(), std::invalid_argument);
}
