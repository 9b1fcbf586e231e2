#pragma once

#include <vector>

#include "hcflow/geometry.hpp"

namespace hcflow {

// Radial-graph view of a vertical graph: X = e^{v} z over the upper
// hemisphere, y = z . e_{n+1} = cos(theta) with theta the polar angle from
// the vertical axis. For rotationally symmetric surfaces the hyperbolic
// principal curvatures reduce to
//   kappa_rad = (y v'' / w^2 + sin(theta) v') / w
//   kappa_tan = (y cot(theta) v' + sin(theta) v') / w     (n-1 times)
// with w = sqrt(1 + v'^2), derivatives in theta.
struct RadialPatchSample {
    double v = 0.0;       // log |X|
    double y = 0.0;       // vertical component of the unit position
    double theta = 0.0;
    double grad_v = 0.0;  // dv/dtheta
    double hess_v = 0.0;  // d2v/dtheta2
    std::vector<double> hyper_kappa;
};

// Evaluates the radial-representation curvatures at grid node `j` by
// resampling the surface on a local uniform latitude stencil (monotone cubic
// interpolation of the vertical graph + bisection for the stencil points).
// Throws GeometryError when the point is at the origin or below the equator,
// std::out_of_range when the stencil leaves the sampled surface.
RadialPatchSample radial_convert(const Grid& grid, const std::vector<double>& u, int j);

struct CrossCheckResult {
    double max_diff = 0.0;       // max over patch nodes and directions
    int compared_nodes = 0;
};

// Vertical (graph) vs radial principal curvatures on the patch of nodes with
// frac_lo <= |x|/r <= frac_hi; both representations describe the same
// surface, so the difference is pure discretization error, O(h^2).
CrossCheckResult cross_check_representations(const Grid& grid, const std::vector<double>& u,
                                             double frac_lo, double frac_hi);

}  // namespace hcflow
