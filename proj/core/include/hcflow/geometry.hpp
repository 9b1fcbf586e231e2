#pragma once

#include <limits>
#include <vector>

#include "hcflow/errors.hpp"
#include "hcflow/linalg.hpp"

namespace hcflow {

// Half-space model throughout: surfaces are graphs x_{n+1} = u(x) > 0 over a
// domain on the asymptotic boundary plane, u in Euclidean units.
enum class DomainMode { interval, rotational_disk };

// interval: Omega = (-r, r), hypersurface dimension n = 1, flat boundary
// (exterior-sphere radius r1 = infinity). rotational_disk: Omega = disk of
// radius r, any n >= 2 through rotational symmetry, r1 = r.
struct DomainSpec {
    DomainMode mode;
    int n;
    double r;

    DomainSpec(DomainMode mode, int n, double r);

    double r1() const {
        return mode == DomainMode::interval ? std::numeric_limits<double>::infinity() : r;
    }
    // Euclidean mean curvature of the domain boundary; >= 0 in both modes.
    double boundary_mean_curvature() const {
        return mode == DomainMode::interval ? 0.0 : 1.0 / r;
    }
};

// Uniform grid. interval: x_j = -r + j h, both ends are boundary nodes.
// rotational_disk: rho_j = j h, the last node is the boundary, rho = 0 is the
// symmetry axis and counts as interior.
struct Grid {
    DomainSpec domain;
    int node_count;
    double h;

    Grid(DomainSpec domain, int node_count);

    double coordinate(int j) const {
        return domain.mode == DomainMode::interval ? -domain.r + j * h : j * h;
    }
    bool is_boundary(int j) const {
        if (domain.mode == DomainMode::interval) return j == 0 || j == node_count - 1;
        return j == node_count - 1;
    }
    int first_interior() const { return domain.mode == DomainMode::interval ? 1 : 0; }
    int last_interior() const { return node_count - 2; }
};

// Per-node geometry bundle. kappa_i = u * euclid_kappa_i + nu_up holds by
// construction; for rotational grids index 0 is the radial direction and the
// tangential value repeats n-1 times.
struct SurfaceSample {
    double u = 0.0;
    double du = 0.0;
    double d2u = 0.0;
    double w = 1.0;
    double nu_up = 1.0;  // vertical normal component = 1/w
    std::vector<double> euclid_kappa;
    std::vector<double> hyper_kappa;

    double kappa_max() const;
};

// Centered second-order differences at an interior node. Throws
// GeometryError on non-positive heights and std::out_of_range at boundary
// nodes. At the axis the even extension u(-h) = u(h) is used and the
// tangential quotient u'/rho takes its limit u''.
SurfaceSample sample_geometry(const Grid& grid, const std::vector<double>& u, int j);

// One-sided second-order estimates for snapshot output at boundary nodes.
SurfaceSample boundary_sample(const Grid& grid, const std::vector<double>& u, int j);

// gamma^{ij} = delta - u_i u_j / (w(1+w)) and its inverse
// gamma_{ij} = delta + u_i u_j / (1+w); the inverse is the square root of
// the induced metric delta + u_i u_j.
struct GammaPair {
    SymMatrix upper;
    SymMatrix lower;
};
GammaPair gamma_matrices(const std::vector<double>& du);

// Full curvature matrix A[u] = (1/w)(I + u gamma'' u'' gamma'') assembled in a
// frame aligned with the gradient; used as the second route when validating
// the rotational reduction.
SymMatrix curvature_matrix(int n, double u, double du, double d2u_radial,
                           double d2u_tangential);

// Umbilic cap: the sphere piece of radius R centered at depth sigma*R below
// the asymptotic plane. Every hyperbolic principal curvature equals sigma
// exactly, independent of R; R controls the boundary value.
struct Cap {
    double sigma;
    double R;

    // boundary value 0 on |x| = r: R = r / sqrt(1 - sigma^2); the boundary
    // slope is then w = 1/sigma exactly.
    static Cap stationary(double sigma, double r);
    // boundary value eps > 0 on |x| = r (truncated cap, R larger than the
    // stationary radius, boundary w strictly below 1/sigma)
    static Cap with_boundary_value(double sigma, double r, double eps);

    double height(double rho) const;
    double slope(double rho) const;  // du/drho, <= 0
    double w(double rho) const;
    double second_derivative(double rho) const;
};

}  // namespace hcflow
