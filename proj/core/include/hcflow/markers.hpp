#pragma once

#include <vector>

#include "hcflow/flow.hpp"

namespace hcflow {

// Lagrangian verification of the evolution identities. Marker triples ride
// the surface with the normal velocity (F - sigma) u nu (horizontal drift
// dx/dt = -(F-sigma) u u_x / w keeps them on the graph exactly), carrying
// the frame metric g~ = |dX/dz|^2 and the frame second fundamental form
// h~ = nu . d2X/dz2 from label-space finite differences. Residuals use
// centered time differences across the sampling stride tau, so they scale
// as O(tau + h^2):
//   metric:   d g~/dt + 2 (F - sigma) u h~                       = 0
//   normal:   d nu/dt + phi_x u_x / w^2,  phi = (F - sigma) u    = 0
//   trace_h:  d(h~/g~)/dt - Delta_Sigma phi - u (F-sigma)(h~/g~)^2 = 0
//   f_evol:   dF/dt - [phi k~/w + u Delta_Sigma phi
//                      + u^2 (F-sigma) k~^2 - phi_x u_x / w^2]     = 0
// The last two are the scalar traces of the second-fundamental-form and
// F evolutions, composed in the same normal parametrization as the first
// two; they are only evaluated in interval mode.
struct EvolutionStudy {
    double tau = 0.0;
    double metric_residual = 0.0;       // max over markers and sampled times
    double normal_residual = 0.0;
    double trace_h_residual = 0.0;
    double f_evolution_residual = 0.0;
    std::vector<double> per_marker_metric;  // per-marker maxima, seed order
    std::vector<double> per_marker_normal;
    int markers_used = 0;
    int markers_dropped = 0;
};

EvolutionStudy verify_evolution_identities(const FlowConfig& config,
                                           const InitialSpec& initial, int marker_count,
                                           double tau, double t_window);

}  // namespace hcflow
