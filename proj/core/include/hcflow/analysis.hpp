#pragma once

#include <functional>

namespace hcflow {

// phi(a) = (4/3)a - a^3/27 - (a^2+3)^{3/2}/27. Strictly increasing on (0,1)
// with phi(0) < 0 < phi(1); its unique zero sigma0 in (0,1) is the threshold
// below which the global curvature bound is not available.
double phi_eval(double a);

struct RootResult {
    double root = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    int iterations = 0;
    double residual = 0.0;  // |phi(root)|
};

// Plain bisection of a sign change; deterministic.
RootResult bisect(const std::function<double(double)>& f, double lo, double hi, double tol);

// Bisection of phi on (0,1) down to bracket width <= tol (tol >= 1e-15).
RootResult find_sigma0(double tol);

// phi_theta(y) = a - (1+theta)(1-y^2)(y-a) / (2(1-theta)), theta in [0,1).
// Throws std::invalid_argument for theta >= 1. At theta = 0 this is
// phi_0(y) = a - (1-y^2)(y-a)/2, whose minimum over y equals phi(a).
double phi_theta_eval(double y, double a, double theta);

// min over the grid y = a+eps, a+eps+step, ..., 1 of phi_0(y).
double phi0_grid_min(double a, double step);

}  // namespace hcflow
