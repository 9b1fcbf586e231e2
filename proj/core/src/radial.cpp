#include "hcflow/radial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hcflow/interp.hpp"

namespace hcflow {

namespace {

double polar_angle(double x, double height) { return std::atan2(x, height); }

// x on the sampled surface with prescribed polar angle; theta(x) increases
// strictly for positive heights, so plain bisection applies.
double solve_angle(const CubicInterpolant& surf, double theta, double lo, double hi) {
    double flo = polar_angle(lo, surf(lo)) - theta;
    double fhi = polar_angle(hi, surf(hi)) - theta;
    if (flo > 0.0 || fhi < 0.0)
        throw std::out_of_range("radial_convert: latitude stencil leaves the surface");
    for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + std::fabs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((polar_angle(mid, surf(mid)) - theta) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double log_radius(const CubicInterpolant& surf, double x) {
    const double uu = surf(x);
    return 0.5 * std::log(x * x + uu * uu);
}

}  // namespace

RadialPatchSample radial_convert(const Grid& grid, const std::vector<double>& u, int j) {
    if (static_cast<int>(u.size()) != grid.node_count)
        throw std::invalid_argument("radial_convert: height vector size mismatch");
    if (j < 0 || j >= grid.node_count) throw std::out_of_range("radial_convert: node index");

    const double x0 = grid.coordinate(j);
    const double u0 = u[j];
    if (!(u0 > 0.0)) throw GeometryError("radial_convert: point below the equator");
    const double radius2 = x0 * x0 + u0 * u0;
    if (!(radius2 > 0.0)) throw GeometryError("radial_convert: point at the origin");

    std::vector<double> xs(u.size());
    for (int i = 0; i < grid.node_count; ++i) xs[static_cast<std::size_t>(i)] = grid.coordinate(i);
    const CubicInterpolant surf(xs, u);

    // local latitude spacing matched to the grid spacing: dtheta = h * dtheta/dx
    const SurfaceSample vert = grid.is_boundary(j) ? boundary_sample(grid, u, j)
                                                   : sample_geometry(grid, u, j);
    const double dtheta_dx = (u0 - x0 * vert.du) / radius2;
    if (!(dtheta_dx > 0.0))
        throw GeometryError("radial_convert: surface is not a radial graph here");
    const double dtheta = grid.h * dtheta_dx;

    const double theta0 = polar_angle(x0, u0);
    double v[5];
    for (int s = -2; s <= 2; ++s) {
        const double th = theta0 + s * dtheta;
        const double xx = (s == 0) ? x0 : solve_angle(surf, th, surf.x_min(), surf.x_max());
        v[s + 2] = log_radius(surf, xx);
    }

    RadialPatchSample out;
    out.theta = theta0;
    out.v = v[2];
    out.y = std::cos(theta0);
    if (!(out.y > 0.0)) throw GeometryError("radial_convert: point below the equator");
    out.grad_v = (v[3] - v[1]) / (2.0 * dtheta);
    out.hess_v = (v[3] - 2.0 * v[2] + v[1]) / (dtheta * dtheta);

    const double w = std::sqrt(1.0 + out.grad_v * out.grad_v);
    const double sin_t = std::sin(theta0);
    const double k_rad = (out.y * out.hess_v / (w * w) + sin_t * out.grad_v) / w;

    out.hyper_kappa.assign(static_cast<std::size_t>(grid.domain.n), 0.0);
    out.hyper_kappa[0] = k_rad;
    if (grid.domain.n > 1) {
        const double cot_t = std::cos(theta0) / sin_t;
        const double k_tan = (out.y * cot_t * out.grad_v + sin_t * out.grad_v) / w;
        for (int i = 1; i < grid.domain.n; ++i)
            out.hyper_kappa[static_cast<std::size_t>(i)] = k_tan;
    }
    return out;
}

CrossCheckResult cross_check_representations(const Grid& grid, const std::vector<double>& u,
                                             double frac_lo, double frac_hi) {
    CrossCheckResult res;
    for (int j = grid.first_interior(); j <= grid.last_interior(); ++j) {
        const double frac = std::fabs(grid.coordinate(j)) / grid.domain.r;
        if (frac < frac_lo || frac > frac_hi) continue;

        const auto vert = sample_geometry(grid, u, j);
        const auto rad = radial_convert(grid, u, j);

        std::vector<double> a = vert.hyper_kappa;
        std::vector<double> b = rad.hyper_kappa;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        for (std::size_t i = 0; i < a.size(); ++i)
            res.max_diff = std::max(res.max_diff, std::fabs(a[i] - b[i]));
        ++res.compared_nodes;
    }
    return res;
}

}  // namespace hcflow
