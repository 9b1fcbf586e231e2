#include "hcflow/markers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "hcflow/interp.hpp"

namespace hcflow {

namespace {

// Per-stored-time view of the state: interpolants of the height and of the
// nodal curvature fields needed at marker positions.
struct FieldFrame {
    double t = 0.0;
    CubicInterpolant u;
    CubicInterpolant du;      // nodal centered first differences
    CubicInterpolant d2u;     // nodal centered second differences
    CubicInterpolant F;
    CubicInterpolant phi_x;   // centered difference of phi = (F - sigma) u
    CubicInterpolant phi_xx;
};

FieldFrame build_frame(const FlowConfig& config, const FlowState& state,
                       const StateEval& ev) {
    const Grid& grid = config.grid;
    const int lo = grid.first_interior();
    const int hi = grid.last_interior();

    std::vector<double> xs, us, dus, d2us, Fs, phis;
    xs.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int j = lo; j <= hi; ++j) {
        const std::size_t ij = static_cast<std::size_t>(j);
        xs.push_back(grid.coordinate(j));
        us.push_back(state.u[ij]);
        dus.push_back(ev.samples[ij].du);
        d2us.push_back(ev.samples[ij].d2u);
        Fs.push_back(ev.F[ij]);
        phis.push_back((ev.F[ij] - config.sigma) * state.u[ij]);
    }

    const double h = grid.h;
    const std::size_t m = phis.size();
    std::vector<double> phix(m, 0.0), phixx(m, 0.0), xin, phix_in, phixx_in;
    for (std::size_t i = 1; i + 1 < m; ++i) {
        phix[i] = (phis[i + 1] - phis[i - 1]) / (2.0 * h);
        phixx[i] = (phis[i + 1] - 2.0 * phis[i] + phis[i - 1]) / (h * h);
        xin.push_back(xs[i]);
        phix_in.push_back(phix[i]);
        phixx_in.push_back(phixx[i]);
    }

    FieldFrame fr{state.t,
                  CubicInterpolant(xs, us),
                  CubicInterpolant(xs, dus),
                  CubicInterpolant(xs, d2us),
                  CubicInterpolant(xs, Fs),
                  CubicInterpolant(xin, phix_in),
                  CubicInterpolant(xin, phixx_in)};
    return fr;
}

struct MarkerPoint {
    double x = 0.0;
    bool alive = true;
};

struct MarkerSeries {
    std::vector<double> g_metric;
    std::vector<double> nu_up;
    std::vector<double> kappa_tilde;  // h~/g~
    std::vector<double> F;
    // right-hand sides sampled at the same times
    std::vector<double> rhs_metric;
    std::vector<double> rhs_normal;
    std::vector<double> rhs_trace;
    std::vector<double> rhs_f;
    std::vector<bool> valid;
};

}  // namespace

EvolutionStudy verify_evolution_identities(const FlowConfig& config,
                                           const InitialSpec& initial, int marker_count,
                                           double tau, double t_window) {
    if (config.grid.domain.mode != DomainMode::interval)
        throw std::invalid_argument(
            "verify_evolution_identities: interval mode only (meridian identities)");
    if (marker_count < 1 || tau <= 0.0 || t_window <= 2.0 * tau)
        throw std::invalid_argument("verify_evolution_identities: bad study parameters");

    FlowState state = initial_surface(config, initial);
    StateEval ev = evaluate_state(config, state);

    const Grid& grid = config.grid;
    const double r = grid.domain.r;
    // seeds at h-independent positions (>= 5 stencils from the boundary) so
    // refinement studies compare residuals along the same physical paths
    const double margin = std::max(6.0 * grid.h, 0.2 * r);
    const double x_lo = -r + margin;
    const double x_hi = r - margin;
    const double delta = 2.0 * grid.h;  // label-space stencil

    // marker triples at labels z - delta, z, z + delta
    std::vector<std::array<MarkerPoint, 3>> markers(static_cast<std::size_t>(marker_count));
    for (int m = 0; m < marker_count; ++m) {
        const double z =
            x_lo + (x_hi - x_lo) * (m + 0.5) / static_cast<double>(marker_count);
        markers[static_cast<std::size_t>(m)] = {MarkerPoint{z - delta}, MarkerPoint{z},
                                                MarkerPoint{z + delta}};
    }
    std::vector<MarkerSeries> series(markers.size());

    const int stored_count = static_cast<int>(std::floor(t_window / tau + 0.5)) + 1;

    EvolutionStudy study;
    study.tau = tau;

    auto record = [&](const FieldFrame& fr) {
        for (std::size_t m = 0; m < markers.size(); ++m) {
            auto& trio = markers[m];
            auto& ser = series[m];
            bool ok = trio[0].alive && trio[1].alive && trio[2].alive;
            for (const auto& mp : trio)
                ok = ok && mp.x > fr.u.x_min() + grid.h && mp.x < fr.u.x_max() - grid.h;
            ser.valid.push_back(ok);
            if (!ok) {
                for (auto& mp : trio) mp.alive = false;
                ser.g_metric.push_back(0.0);
                ser.nu_up.push_back(0.0);
                ser.kappa_tilde.push_back(0.0);
                ser.F.push_back(0.0);
                ser.rhs_metric.push_back(0.0);
                ser.rhs_normal.push_back(0.0);
                ser.rhs_trace.push_back(0.0);
                ser.rhs_f.push_back(0.0);
                continue;
            }

            const double xm = trio[1].x;
            const double xl = trio[0].x, xr = trio[2].x;
            const double ul = fr.u(xl), um = fr.u(xm), ur = fr.u(xr);

            // frame tangent and curvature from label-space differences
            const double tx = (xr - xl) / (2.0 * delta);
            const double tz = (ur - ul) / (2.0 * delta);
            const double g = tx * tx + tz * tz;
            const double sxx = (xr - 2.0 * xm + xl) / (delta * delta);
            const double szz = (ur - 2.0 * um + ul) / (delta * delta);

            const double ux = fr.du(xm);
            const double uxx = fr.d2u(xm);
            const double w = std::sqrt(1.0 + ux * ux);
            const double nu_x = -ux / w, nu_z = 1.0 / w;
            const double htilde = nu_x * sxx + nu_z * szz;

            const double F = fr.F(xm);
            const double phi = (F - config.sigma) * um;
            const double phix = fr.phi_x(xm);
            const double phixx = fr.phi_xx(xm);
            const double lap_phi = phixx / (w * w) - phix * ux * uxx / (w * w * w * w);
            const double ktilde = htilde / g;

            ser.g_metric.push_back(g);
            ser.nu_up.push_back(1.0 / w);
            ser.kappa_tilde.push_back(ktilde);
            ser.F.push_back(F);
            ser.rhs_metric.push_back(2.0 * (F - config.sigma) * um * htilde);
            ser.rhs_normal.push_back(phix * ux / (w * w));
            ser.rhs_trace.push_back(lap_phi + um * (F - config.sigma) * ktilde * ktilde);
            ser.rhs_f.push_back(phi * ktilde / w + um * lap_phi +
                                um * um * (F - config.sigma) * ktilde * ktilde -
                                phix * ux / (w * w));
        }
    };

    auto advect = [&](const FieldFrame& fr) {
        for (auto& trio : markers)
            for (auto& mp : trio) {
                if (!mp.alive) continue;
                const double ux = fr.du(mp.x);
                const double w = std::sqrt(1.0 + ux * ux);
                const double phi = (fr.F(mp.x) - config.sigma) * fr.u(mp.x);
                mp.x += tau * (-phi * ux / w);
            }
    };

    FieldFrame frame = build_frame(config, state, ev);
    record(frame);
    for (int k = 1; k < stored_count; ++k) {
        advect(frame);
        const double leg_end = k * tau;
        FlowConfig leg = config;
        leg.t_end = leg_end;  // step() caps dt so each leg lands on the stored time
        while (state.t < leg_end - 1e-13) {
            auto [next, rep] = step(state, leg);
            state = std::move(next);
        }
        ev = evaluate_state(config, state);
        frame = build_frame(config, state, ev);
        record(frame);
    }

    // centered time differences at interior stored samples
    study.per_marker_metric.assign(series.size(), 0.0);
    study.per_marker_normal.assign(series.size(), 0.0);
    for (std::size_t m = 0; m < series.size(); ++m) {
        const auto& ser = series[m];
        bool used = false;
        for (std::size_t k = 1; k + 1 < ser.F.size(); ++k) {
            if (!(ser.valid[k - 1] && ser.valid[k] && ser.valid[k + 1])) continue;
            used = true;
            const double dg = (ser.g_metric[k + 1] - ser.g_metric[k - 1]) / (2.0 * tau);
            const double dnu = (ser.nu_up[k + 1] - ser.nu_up[k - 1]) / (2.0 * tau);
            const double dkt = (ser.kappa_tilde[k + 1] - ser.kappa_tilde[k - 1]) / (2.0 * tau);
            const double dF = (ser.F[k + 1] - ser.F[k - 1]) / (2.0 * tau);
            study.per_marker_metric[m] =
                std::max(study.per_marker_metric[m], std::fabs(dg + ser.rhs_metric[k]));
            study.per_marker_normal[m] =
                std::max(study.per_marker_normal[m], std::fabs(dnu + ser.rhs_normal[k]));
            study.trace_h_residual =
                std::max(study.trace_h_residual, std::fabs(dkt - ser.rhs_trace[k]));
            study.f_evolution_residual =
                std::max(study.f_evolution_residual, std::fabs(dF - ser.rhs_f[k]));
        }
        study.metric_residual = std::max(study.metric_residual, study.per_marker_metric[m]);
        study.normal_residual = std::max(study.normal_residual, study.per_marker_normal[m]);
        if (used)
            ++study.markers_used;
        else
            ++study.markers_dropped;
    }
    return study;
}

}  // namespace hcflow
