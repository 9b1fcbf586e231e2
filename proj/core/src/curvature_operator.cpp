#include "hcflow/curvature_operator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hcflow {

OperatorValue F_matrix_eval(const CurvatureSpec& spec, const SymMatrix& a) {
    const auto eig = jacobi_eigen(a);
    OperatorValue out;
    out.eigenvalues = eig.values;
    out.value = f_eval(spec, eig.values);  // throws ConeError when inadmissible

    std::vector<double> grad = f_grad(spec, eig.values);

    // Average f_i over eigenvalue clusters: f of a symmetric function is
    // continuous across eigenvalue collisions, while individual eigenvectors
    // are basis-sensitive there.
    double scale = 0.0;
    for (double v : eig.values) scale = std::max(scale, std::fabs(v));
    const double gap_tol = 1e-9 * (1.0 + scale);

    std::vector<std::size_t> order(eig.values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return eig.values[i] < eig.values[j]; });

    std::size_t start = 0;
    while (start < order.size()) {
        std::size_t end = start + 1;
        while (end < order.size() &&
               eig.values[order[end]] - eig.values[order[end - 1]] < gap_tol)
            ++end;
        if (end - start > 1) {
            double avg = 0.0;
            for (std::size_t i = start; i < end; ++i) avg += grad[order[i]];
            avg /= static_cast<double>(end - start);
            for (std::size_t i = start; i < end; ++i) grad[order[i]] = avg;
        }
        start = end;
    }
    out.eigen_gradient = grad;

    const std::size_t n = a.dim();
    out.gradient_matrix = SymMatrix(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                s += grad[k] * eig.vectors(k, i) * eig.vectors(k, j);
            out.gradient_matrix(i, j) = s;
            out.gradient_matrix(j, i) = s;
        }
    return out;
}

}  // namespace hcflow
