#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hcflow/curvature.hpp"
#include "hcflow/geometry.hpp"

namespace hcflow {

// Configuration of one epsilon-regularized Dirichlet flow
//   u_t = u w (f(kappa[u]) - sigma),  u = epsilon on the boundary.
// A trajectory is single-threaded state; run distinct configs in parallel
// instead. Per-node evaluation reads the state only.
struct FlowConfig {
    CurvatureSpec spec;
    Grid grid;
    double sigma;
    double epsilon;         // boundary lift; must satisfy epsilon <= r/10
    double dt_max = 1e-3;
    double safety = 0.5;    // fraction of the parabolic stability limit
    double t_end = 100.0;
    double stat_tol = 1e-6; // stationarity tolerance on max |f - sigma|
    double monitor_a = -1.0;  // ratio-monitor offset; < 0 selects the t=0 rule

    FlowConfig(CurvatureSpec spec, Grid grid, double sigma, double epsilon);
    void validate() const;  // throws std::invalid_argument
};

struct FlowState {
    std::vector<double> u;
    double t = 0.0;
    long step_index = 0;
};

enum class InitialKind { stationary_cap, subcritical_cap, perturbed_cap, horosphere };

struct InitialSpec {
    InitialKind kind = InitialKind::stationary_cap;
    double sigma_prime = 0.0;  // subcritical/perturbed: curvature of the initial cap
    double amplitude = 0.0;    // perturbed: interior bump height
};

// Admission hypotheses evaluated on the discrete initial surface.
// f <= sigma is required (tolerance 10 h^2 for the discretized cap).
// Parabolicity G_u = (-2F + sigma + sum f_i / w)/u > 0 is required; it is the
// quantity the gradient maximum principle runs on. The strict slope condition
// w < 1/sigma is recorded; a surface with f strictly below sigma near the
// epsilon-boundary necessarily violates it by an O(1) amount, so it does not
// gate admission (see check_gradient_bound for the monitor consequences).
struct InitialCheck {
    bool f_le_sigma = false;
    bool parabolicity = false;
    bool gradient_strict = false;
    double max_F = 0.0;
    double max_w = 0.0;
    double min_Gu = 0.0;
};

// Cached evaluation of one state: per-node geometry, curvature values and
// the scale that drives the parabolic time-step bound.
struct StateEval {
    std::vector<SurfaceSample> samples;  // indexed by node; boundary slots empty
    std::vector<double> F;               // f(kappa); NaN at boundary slots
    std::vector<double> grad_sum;        // sum_i f_i
    std::vector<double> f_radial;        // df/dkappa_radial
    double max_residual = 0.0;           // max |F - sigma|, interior
    double max_F_minus_sigma = -1e300;
    double min_F_minus_sigma = 1e300;
    double max_w = 0.0;                  // all nodes, boundary one-sided
    double max_w_interior = 0.0;
    double min_nu = 1.0;                 // interior
    double max_u_d2u = 0.0;              // max u * |D^2 u| entry, interior
    double max_kappa_max = -1e300;       // interior
    double max_diffusion = 0.0;          // max_j u^2 (f-weighted stencil scale)
    double min_Gu = 1e300;
};

StateEval evaluate_state(const FlowConfig& config, const FlowState& state);

FlowState initial_surface(const FlowConfig& config, const InitialSpec& initial,
                          InitialCheck* check_out = nullptr);

struct StepReport {
    double dt = 0.0;
    int halvings = 0;
    double max_ut = 0.0;
    double max_F_minus_sigma = 0.0;
    double min_F_minus_sigma = 0.0;
    double max_w = 0.0;
};

// One explicit step with the parabolic dt bound and up-to-20 halvings on
// loss of admissibility or positivity. Throws StepFailure when exhausted.
std::pair<FlowState, StepReport> step(const FlowState& state, const FlowConfig& config);

// Halving driver shared with step(); try_dt returns true when the step at
// that dt is acceptable. Returns the accepted dt, or 0 after max_halvings.
double attempt_with_halvings(double dt, int max_halvings,
                             const std::function<bool(double)>& try_dt);

// One row per accepted step: the CSV columns plus the monitored margins.
struct StepRow {
    double t = 0.0;
    double dt = 0.0;
    double max_ut = 0.0;
    double max_F_minus_sigma = 0.0;
    double min_F_minus_sigma = 0.0;
    double max_w = 0.0;
    double max_u_d2u = 0.0;
    double ratio_value = 0.0;
    double cumulative_integral = 0.0;  // max over nodes of int (sigma - F) u w dt
    double gradient_margin = 0.0;      // 1/sigma - max w
    double F_margin = 0.0;             // sigma - max F
    double barrier_margin = 0.0;       // +inf sentinel in interval mode
    bool monotone_raw = false;         // u pointwise non-increasing over the step
    bool monotone_ok = false;          // monotone_raw, or vacuous when max(F-sigma) > 0
    double min_nu = 0.0;
};

struct RunCallbacks {
    std::function<void(const StepRow&)> on_row;
    std::function<void(const FlowState&, const StateEval&)> on_snapshot;
    int snapshot_stride = 0;  // 0: final snapshot only
};

struct RunResult {
    bool converged = false;
    bool step_failed = false;
    std::string step_failure_message;
    double t_final = 0.0;
    long steps = 0;
    double final_residual = 0.0;
    FlowState final_state;
    std::vector<double> initial_u;
    StepRow initial_row;          // monitors evaluated on the initial surface
    std::vector<StepRow> rows;
    std::vector<double> cumulative_integral;  // per node
    InitialCheck initial_check;
    double monitor_a_used = 0.0;
    bool ratio_precondition_ok = true;
};

RunResult run_to_stationary(const FlowConfig& config, const InitialSpec& initial,
                            const RunCallbacks* callbacks = nullptr);

}  // namespace hcflow
