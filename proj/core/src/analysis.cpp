#include "hcflow/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace hcflow {

double phi_eval(double a) {
    return (4.0 / 3.0) * a - a * a * a / 27.0 - std::pow(a * a + 3.0, 1.5) / 27.0;
}

RootResult bisect(const std::function<double(double)>& f, double lo, double hi, double tol) {
    double flo = f(lo);
    double fhi = f(hi);
    if (!(flo < 0.0 && fhi > 0.0))
        throw std::invalid_argument("bisect: bracket does not straddle a sign change");

    RootResult r;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at roundoff resolution
        const double fm = f(mid);
        ++r.iterations;
        if (fm < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    r.lo = lo;
    r.hi = hi;
    r.root = 0.5 * (lo + hi);
    r.residual = std::fabs(f(r.root));
    return r;
}

RootResult find_sigma0(double tol) {
    if (tol < 1e-15) throw std::invalid_argument("find_sigma0: tol must be >= 1e-15");
    return bisect(phi_eval, 0.0, 1.0, tol);
}

double phi_theta_eval(double y, double a, double theta) {
    if (theta >= 1.0) throw std::invalid_argument("phi_theta_eval: theta must be < 1");
    return a - (1.0 + theta) * (1.0 - y * y) * (y - a) / (2.0 * (1.0 - theta));
}

double phi0_grid_min(double a, double step) {
    double best = phi_theta_eval(1.0, a, 0.0);
    for (double y = a + 1e-6; y < 1.0; y += step)
        best = std::fmin(best, phi_theta_eval(y, a, 0.0));
    return best;
}

}  // namespace hcflow
