#include "hcflow/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hcflow {

DomainSpec::DomainSpec(DomainMode mode, int n, double r) : mode(mode), n(n), r(r) {
    if (r <= 0.0) throw std::invalid_argument("DomainSpec: r must be positive");
    if (mode == DomainMode::interval && n != 1)
        throw std::invalid_argument("DomainSpec: interval mode forces n = 1");
    if (mode == DomainMode::rotational_disk && n < 2)
        throw std::invalid_argument("DomainSpec: rotational_disk needs n >= 2");
}

Grid::Grid(DomainSpec domain_, int node_count_) : domain(domain_), node_count(node_count_) {
    if (node_count < 3) throw std::invalid_argument("Grid: need at least 3 nodes");
    h = (domain.mode == DomainMode::interval) ? 2.0 * domain.r / (node_count - 1)
                                              : domain.r / (node_count - 1);
}

double SurfaceSample::kappa_max() const {
    double m = -1e300;
    for (double k : hyper_kappa) m = std::max(m, k);
    return m;
}

namespace {

SurfaceSample assemble(const Grid& grid, double rho, double u, double du, double d2u,
                       bool at_axis) {
    if (!(u > 0.0)) throw GeometryError("sample_geometry: non-positive height");

    SurfaceSample s;
    s.u = u;
    s.du = du;
    s.d2u = d2u;
    s.w = std::sqrt(1.0 + du * du);
    s.nu_up = 1.0 / s.w;

    const int n = grid.domain.n;
    s.euclid_kappa.resize(n);
    s.hyper_kappa.resize(n);

    const double w3 = s.w * s.w * s.w;
    const double kr = d2u / w3;                                  // radial direction
    const double kt = at_axis ? d2u : du / (rho * s.w);          // u'/rho -> u'' at the axis
    s.euclid_kappa[0] = kr;
    for (int i = 1; i < n; ++i) s.euclid_kappa[i] = kt;
    for (int i = 0; i < n; ++i) s.hyper_kappa[i] = u * s.euclid_kappa[i] + s.nu_up;
    return s;
}

}  // namespace

SurfaceSample sample_geometry(const Grid& grid, const std::vector<double>& u, int j) {
    if (static_cast<int>(u.size()) != grid.node_count)
        throw std::invalid_argument("sample_geometry: height vector size mismatch");
    if (grid.is_boundary(j)) throw std::out_of_range("sample_geometry: boundary node");
    if (j < 0 || j >= grid.node_count) throw std::out_of_range("sample_geometry: node index");

    const double h = grid.h;
    if (grid.domain.mode == DomainMode::rotational_disk && j == 0) {
        // axis: even extension, u'(0) = 0
        const double d2u = 2.0 * (u[1] - u[0]) / (h * h);
        return assemble(grid, 0.0, u[0], 0.0, d2u, true);
    }
    const double du = (u[j + 1] - u[j - 1]) / (2.0 * h);
    const double d2u = (u[j + 1] - 2.0 * u[j] + u[j - 1]) / (h * h);
    return assemble(grid, std::fabs(grid.coordinate(j)), u[j], du, d2u, false);
}

SurfaceSample boundary_sample(const Grid& grid, const std::vector<double>& u, int j) {
    if (!grid.is_boundary(j)) return sample_geometry(grid, u, j);
    const double h = grid.h;
    const int n = grid.node_count;
    double du, d2u;
    if (j == 0) {
        du = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * h);
        d2u = (2.0 * u[0] - 5.0 * u[1] + 4.0 * u[2] - u[3]) / (h * h);
    } else {
        du = (3.0 * u[n - 1] - 4.0 * u[n - 2] + u[n - 3]) / (2.0 * h);
        d2u = (2.0 * u[n - 1] - 5.0 * u[n - 2] + 4.0 * u[n - 3] - u[n - 4]) / (h * h);
    }
    return assemble(grid, std::fabs(grid.coordinate(j)), u[j], du, d2u, false);
}

GammaPair gamma_matrices(const std::vector<double>& du) {
    const std::size_t n = du.size();
    double g2 = 0.0;
    for (double d : du) g2 += d * d;
    const double w = std::sqrt(1.0 + g2);

    GammaPair g{SymMatrix(n), SymMatrix(n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double delta = (i == j) ? 1.0 : 0.0;
            g.upper(i, j) = delta - du[i] * du[j] / (w * (1.0 + w));
            g.lower(i, j) = delta + du[i] * du[j] / (1.0 + w);
        }
    return g;
}

SymMatrix curvature_matrix(int n, double u, double du, double d2u_radial,
                           double d2u_tangential) {
    std::vector<double> grad(static_cast<std::size_t>(n), 0.0);
    grad[0] = du;
    const auto g = gamma_matrices(grad);
    const double w = std::sqrt(1.0 + du * du);

    std::vector<double> hess(static_cast<std::size_t>(n), d2u_tangential);
    hess[0] = d2u_radial;
    const SymMatrix d2 = SymMatrix::diagonal(hess);

    const SymMatrix inner = g.upper * d2 * g.upper;
    SymMatrix a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double delta = (i == j) ? 1.0 : 0.0;
            a(i, j) = (delta + u * inner(i, j)) / w;
        }
    return a;
}

Cap Cap::stationary(double sigma, double r) {
    if (!(sigma > 0.0 && sigma < 1.0))
        throw std::invalid_argument("Cap: sigma must lie in (0,1)");
    return Cap{sigma, r / std::sqrt(1.0 - sigma * sigma)};
}

Cap Cap::with_boundary_value(double sigma, double r, double eps) {
    if (!(sigma > 0.0 && sigma < 1.0))
        throw std::invalid_argument("Cap: sigma must lie in (0,1)");
    if (eps < 0.0) throw std::invalid_argument("Cap: boundary value must be >= 0");
    // sqrt(R^2 - r^2) = sigma R + eps has one root above the stationary radius
    const double s2 = sigma * sigma;
    const double R =
        (sigma * eps + std::sqrt(s2 * eps * eps + (1.0 - s2) * (r * r + eps * eps))) /
        (1.0 - s2);
    return Cap{sigma, R};
}

double Cap::height(double rho) const { return std::sqrt(R * R - rho * rho) - sigma * R; }

double Cap::slope(double rho) const { return -rho / std::sqrt(R * R - rho * rho); }

double Cap::w(double rho) const { return R / std::sqrt(R * R - rho * rho); }

double Cap::second_derivative(double rho) const {
    const double q = R * R - rho * rho;
    return -R * R / (q * std::sqrt(q));
}

}  // namespace hcflow
