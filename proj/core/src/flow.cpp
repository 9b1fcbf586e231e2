#include "hcflow/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hcflow/monitor.hpp"

namespace hcflow {

FlowConfig::FlowConfig(CurvatureSpec spec_, Grid grid_, double sigma_, double epsilon_)
    : spec(spec_), grid(grid_), sigma(sigma_), epsilon(epsilon_) {}

void FlowConfig::validate() const {
    if (!(sigma > 0.0 && sigma < 1.0))
        throw std::invalid_argument("FlowConfig: sigma must lie in (0,1)");
    if (!(epsilon > 0.0)) throw std::invalid_argument("FlowConfig: epsilon must be positive");
    if (epsilon > grid.domain.r / 10.0)
        throw std::invalid_argument("FlowConfig: epsilon must be <= r/10");
    if (spec.n != grid.domain.n)
        throw std::invalid_argument("FlowConfig: curvature and domain dimensions differ");
    if (!(dt_max > 0.0)) throw std::invalid_argument("FlowConfig: dt_max must be positive");
    if (!(safety > 0.0 && safety < 1.0))
        throw std::invalid_argument("FlowConfig: safety must lie in (0,1)");
    if (!(t_end > 0.0)) throw std::invalid_argument("FlowConfig: t_end must be positive");
    if (!(stat_tol > 0.0)) throw std::invalid_argument("FlowConfig: stat_tol must be positive");
    if (monitor_a >= 0.0 && !(monitor_a > 0.0 && monitor_a < sigma))
        throw std::invalid_argument("FlowConfig: monitor_a must lie in (0, sigma)");
}

StateEval evaluate_state(const FlowConfig& config, const FlowState& state) {
    const Grid& grid = config.grid;
    const int n_nodes = grid.node_count;
    const int dim = config.spec.n;

    StateEval ev;
    ev.samples.resize(static_cast<std::size_t>(n_nodes));
    ev.F.assign(static_cast<std::size_t>(n_nodes), std::numeric_limits<double>::quiet_NaN());
    ev.grad_sum.assign(static_cast<std::size_t>(n_nodes), 0.0);
    ev.f_radial.assign(static_cast<std::size_t>(n_nodes), 0.0);

    for (int j = grid.first_interior(); j <= grid.last_interior(); ++j) {
        const std::size_t ij = static_cast<std::size_t>(j);
        SurfaceSample s = sample_geometry(grid, state.u, j);

        if (!cone_contains(config.spec, s.hyper_kappa))
            throw ConeError("evaluate_state: admissibility lost at node " + std::to_string(j));
        const double F = f_eval(config.spec, s.hyper_kappa);
        const auto fg = f_grad(config.spec, s.hyper_kappa);

        double gsum = 0.0;
        for (double g : fg) gsum += g;
        ev.grad_sum[ij] = gsum;
        ev.f_radial[ij] = fg[0];
        ev.F[ij] = F;

        ev.max_F_minus_sigma = std::max(ev.max_F_minus_sigma, F - config.sigma);
        ev.min_F_minus_sigma = std::min(ev.min_F_minus_sigma, F - config.sigma);
        ev.max_residual = std::max(ev.max_residual, std::fabs(F - config.sigma));
        ev.max_w_interior = std::max(ev.max_w_interior, s.w);
        ev.min_nu = std::min(ev.min_nu, s.nu_up);
        ev.max_kappa_max = std::max(ev.max_kappa_max, s.kappa_max());

        // largest Hessian entry: radial u'' plus the tangential u'/rho block
        double hess = std::fabs(s.d2u);
        if (dim > 1) {
            const double rho = std::fabs(grid.coordinate(j));
            const double tang = (j == 0) ? std::fabs(s.d2u) : std::fabs(s.du / rho);
            hess = std::max(hess, tang);
        }
        ev.max_u_d2u = std::max(ev.max_u_d2u, s.u * hess);

        // parabolic stencil scale; the tangential first-difference term
        // enters the stability row sum with weight h/(2 rho)
        const double w2 = s.w * s.w;
        double diffusion;
        if (grid.domain.mode == DomainMode::rotational_disk && j == 0) {
            double ftan = 0.0;
            for (int i = 1; i < dim; ++i) ftan += fg[static_cast<std::size_t>(i)];
            diffusion = s.u * s.u * (fg[0] + ftan);
        } else {
            diffusion = s.u * s.u * fg[0] / w2;
            if (dim > 1) {
                const double rho = std::fabs(grid.coordinate(j));
                double ftan = 0.0;
                for (int i = 1; i < dim; ++i) ftan += fg[static_cast<std::size_t>(i)];
                diffusion += s.u * s.u * ftan * grid.h / (2.0 * rho * w2);
            }
        }
        ev.max_diffusion = std::max(ev.max_diffusion, diffusion);

        const double gu = (-2.0 * F + config.sigma + gsum / s.w) / s.u;
        ev.min_Gu = std::min(ev.min_Gu, gu);

        ev.samples[ij] = std::move(s);
    }

    ev.max_w = ev.max_w_interior;
    for (int j = 0; j < n_nodes; ++j) {
        if (!grid.is_boundary(j)) continue;
        const SurfaceSample bs = boundary_sample(grid, state.u, j);
        ev.samples[static_cast<std::size_t>(j)] = bs;
        ev.max_w = std::max(ev.max_w, bs.w);
    }
    return ev;
}

namespace {

std::vector<double> rhs_from(const FlowConfig& config, const FlowState& state,
                             const StateEval& ev) {
    std::vector<double> rhs(state.u.size(), 0.0);
    const Grid& grid = config.grid;
    for (int j = grid.first_interior(); j <= grid.last_interior(); ++j) {
        const std::size_t ij = static_cast<std::size_t>(j);
        rhs[ij] = state.u[ij] * ev.samples[ij].w * (ev.F[ij] - config.sigma);
    }
    return rhs;
}

struct StepOutcome {
    FlowState state;
    StateEval eval;
    StepReport report;
};

StepOutcome take_step(const FlowConfig& config, const FlowState& state, const StateEval& ev) {
    const Grid& grid = config.grid;
    const std::vector<double> rhs = rhs_from(config, state, ev);

    double dt0 = config.dt_max;
    if (ev.max_diffusion > 0.0)
        dt0 = std::min(dt0, grid.h * grid.h / ev.max_diffusion);
    dt0 *= config.safety;
    if (state.t + dt0 > config.t_end) dt0 = config.t_end - state.t;

    FlowState trial;
    StateEval trial_eval;
    const double accepted = attempt_with_halvings(dt0, 20, [&](double dt) {
        trial.u = state.u;
        for (int j = grid.first_interior(); j <= grid.last_interior(); ++j) {
            const std::size_t ij = static_cast<std::size_t>(j);
            trial.u[ij] = state.u[ij] + dt * rhs[ij];
            if (!(trial.u[ij] > 0.0)) return false;
        }
        trial.t = state.t + dt;
        trial.step_index = state.step_index + 1;
        try {
            trial_eval = evaluate_state(config, trial);
        } catch (const ConeError&) {
            return false;
        } catch (const GeometryError&) {
            return false;
        }
        return true;
    });

    if (accepted == 0.0)
        throw StepFailure("step: no admissible update after 20 dt halvings at t = " +
                          std::to_string(state.t));

    StepOutcome out;
    out.state = std::move(trial);
    out.eval = std::move(trial_eval);
    out.report.dt = accepted;
    out.report.halvings = static_cast<int>(std::lround(std::log2(dt0 / accepted)));
    double max_ut = 0.0;
    for (double r : rhs) max_ut = std::max(max_ut, std::fabs(r));
    out.report.max_ut = max_ut;
    out.report.max_F_minus_sigma = ev.max_F_minus_sigma;
    out.report.min_F_minus_sigma = ev.min_F_minus_sigma;
    out.report.max_w = ev.max_w;
    return out;
}

}  // namespace

double attempt_with_halvings(double dt, int max_halvings,
                             const std::function<bool(double)>& try_dt) {
    for (int i = 0; i <= max_halvings; ++i) {
        if (try_dt(dt)) return dt;
        dt *= 0.5;
    }
    return 0.0;
}

std::pair<FlowState, StepReport> step(const FlowState& state, const FlowConfig& config) {
    const StateEval ev = evaluate_state(config, state);
    StepOutcome out = take_step(config, state, ev);
    return {std::move(out.state), out.report};
}

FlowState initial_surface(const FlowConfig& config, const InitialSpec& initial,
                          InitialCheck* check_out) {
    config.validate();
    const Grid& grid = config.grid;
    const double r = grid.domain.r;

    FlowState state;
    state.u.resize(static_cast<std::size_t>(grid.node_count));

    switch (initial.kind) {
        case InitialKind::stationary_cap: {
            const Cap cap = Cap::with_boundary_value(config.sigma, r, config.epsilon);
            for (int j = 0; j < grid.node_count; ++j)
                state.u[static_cast<std::size_t>(j)] =
                    cap.height(std::fabs(grid.coordinate(j)));
            break;
        }
        case InitialKind::subcritical_cap:
        case InitialKind::perturbed_cap: {
            if (!(initial.sigma_prime > 0.0 && initial.sigma_prime < config.sigma))
                throw std::invalid_argument(
                    "initial_surface: need 0 < sigma_prime < sigma for subcritical caps");
            const Cap cap = Cap::with_boundary_value(initial.sigma_prime, r, config.epsilon);
            for (int j = 0; j < grid.node_count; ++j) {
                const double x = grid.coordinate(j);
                double uj = cap.height(std::fabs(x));
                if (initial.kind == InitialKind::perturbed_cap) {
                    const double s = x / r;
                    const double b = (1.0 - s * s);
                    uj += initial.amplitude * b * b;
                }
                state.u[static_cast<std::size_t>(j)] = uj;
            }
            break;
        }
        case InitialKind::horosphere: {
            for (double& v : state.u) v = config.epsilon;
            break;
        }
    }

    for (int j = 0; j < grid.node_count; ++j)
        if (grid.is_boundary(j)) state.u[static_cast<std::size_t>(j)] = config.epsilon;

    StateEval ev;
    try {
        ev = evaluate_state(config, state);
    } catch (const ConeError& e) {
        throw InadmissibleInitialData(std::string("initial surface inadmissible: ") + e.what(),
                                      -1, "cone", 0.0, 0.0);
    }

    InitialCheck check;
    check.max_F = ev.max_F_minus_sigma + config.sigma;
    check.max_w = ev.max_w;
    check.min_Gu = ev.min_Gu;
    const double h2_slack = 10.0 * grid.h * grid.h;
    check.f_le_sigma = check.max_F <= config.sigma + h2_slack;
    check.parabolicity = check.min_Gu > 0.0;
    check.gradient_strict = check.max_w < 1.0 / config.sigma;
    if (check_out) *check_out = check;

    if (!check.f_le_sigma) {
        int worst = -1;
        double worstF = -1e300;
        for (int j = grid.first_interior(); j <= grid.last_interior(); ++j)
            if (ev.F[static_cast<std::size_t>(j)] > worstF) {
                worstF = ev.F[static_cast<std::size_t>(j)];
                worst = j;
            }
        throw InadmissibleInitialData("initial surface violates f(kappa) <= sigma", worst,
                                      "f(kappa)", worstF, config.sigma + h2_slack);
    }
    if (!check.parabolicity) {
        throw InadmissibleInitialData(
            "initial surface violates the parabolicity condition G_u > 0", -1, "G_u",
            check.min_Gu, 0.0);
    }
    return state;
}

namespace {

StepRow make_row(const FlowConfig& config, const FlowState& state, const StateEval& ev,
                 double monitor_a, double cum_integral_max, bool* ratio_ok) {
    StepRow row;
    row.t = state.t;
    row.max_F_minus_sigma = ev.max_F_minus_sigma;
    row.min_F_minus_sigma = ev.min_F_minus_sigma;
    row.max_w = ev.max_w;
    row.max_u_d2u = ev.max_u_d2u;
    row.min_nu = ev.min_nu;
    row.cumulative_integral = cum_integral_max;
    row.gradient_margin = check_gradient_bound(ev, config.sigma);
    row.F_margin = check_F_bound(ev, config.sigma);
    row.barrier_margin = check_boundary_barrier(config, state, ev);
    if (ev.min_nu > monitor_a) {
        row.ratio_value = check_ratio(config.grid, ev, monitor_a);
    } else {
        row.ratio_value = std::numeric_limits<double>::infinity();
        if (ratio_ok) *ratio_ok = false;
    }
    return row;
}

}  // namespace

RunResult run_to_stationary(const FlowConfig& config, const InitialSpec& initial,
                            const RunCallbacks* callbacks) {
    RunResult res;
    FlowState state = initial_surface(config, initial, &res.initial_check);
    res.initial_u = state.u;
    StateEval ev = evaluate_state(config, state);

    res.monitor_a_used = config.monitor_a >= 0.0
                             ? config.monitor_a
                             : 0.9 * std::min(config.sigma, ev.min_nu);
    if (!(res.monitor_a_used < ev.min_nu))
        throw std::invalid_argument(
            "run_to_stationary: monitor_a must stay below inf nu at t = 0");

    res.cumulative_integral.assign(state.u.size(), 0.0);
    res.initial_row =
        make_row(config, state, ev, res.monitor_a_used, 0.0, &res.ratio_precondition_ok);
    res.initial_row.monotone_raw = res.initial_row.monotone_ok = true;

    double cum_max = 0.0;
    while (true) {
        if (ev.max_residual < config.stat_tol) {
            res.converged = true;
            break;
        }
        if (state.t >= config.t_end) break;

        StepOutcome out;
        try {
            out = take_step(config, state, ev);
        } catch (const StepFailure& e) {
            res.step_failed = true;
            res.step_failure_message = e.what();
            break;
        }

        // exact discrete time integral of (sigma - F) u w
        const Grid& grid = config.grid;
        for (int j = grid.first_interior(); j <= grid.last_interior(); ++j) {
            const std::size_t ij = static_cast<std::size_t>(j);
            res.cumulative_integral[ij] +=
                (config.sigma - ev.F[ij]) * state.u[ij] * ev.samples[ij].w * out.report.dt;
            cum_max = std::max(cum_max, res.cumulative_integral[ij]);
        }

        StepRow row = make_row(config, out.state, out.eval, res.monitor_a_used, cum_max,
                               &res.ratio_precondition_ok);
        row.dt = out.report.dt;
        row.max_ut = out.report.max_ut;
        row.monotone_raw = check_monotonicity(state, out.state);
        row.monotone_ok = row.monotone_raw || ev.max_F_minus_sigma > 0.0;

        state = std::move(out.state);
        ev = std::move(out.eval);
        res.rows.push_back(row);
        if (callbacks && callbacks->on_row) callbacks->on_row(row);
        if (callbacks && callbacks->on_snapshot && callbacks->snapshot_stride > 0 &&
            state.step_index % callbacks->snapshot_stride == 0)
            callbacks->on_snapshot(state, ev);
    }

    res.t_final = state.t;
    res.steps = state.step_index;
    res.final_residual = ev.max_residual;
    res.final_state = std::move(state);
    if (callbacks && callbacks->on_snapshot)
        callbacks->on_snapshot(res.final_state, ev);
    return res;
}

}  // namespace hcflow
