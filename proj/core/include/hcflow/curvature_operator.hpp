#pragma once

#include <vector>

#include "hcflow/curvature.hpp"
#include "hcflow/linalg.hpp"

namespace hcflow {

// F(A) = f(lambda(A)) together with its first derivative matrix
// F^{ij} = dF/da_{ij}. At diagonal A the derivative matrix is diag(f_i);
// in general F^{ij} = sum_s f_s P_{si} P_{sj} over the eigenbasis.
struct OperatorValue {
    double value = 0.0;
    SymMatrix gradient_matrix;
    std::vector<double> eigenvalues;
    std::vector<double> eigen_gradient;  // f_i, cluster-averaged at near-degenerate eigenvalues
};

// Throws ConeError when lambda(A) is outside the cone.
OperatorValue F_matrix_eval(const CurvatureSpec& spec, const SymMatrix& a);

}  // namespace hcflow
