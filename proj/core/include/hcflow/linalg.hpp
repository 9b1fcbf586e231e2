#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace hcflow {

// Dense symmetric matrix of dimension n <= kMaxDim, value semantics.
// Big enough for every curvature computation in this project; no heap.
class SymMatrix {
public:
    static constexpr std::size_t kMaxDim = 8;

    SymMatrix() : n_(0), a_{} {}
    explicit SymMatrix(std::size_t n) : n_(n), a_{} {}

    static SymMatrix identity(std::size_t n);
    static SymMatrix diagonal(const std::vector<double>& d);

    std::size_t dim() const { return n_; }

    double& operator()(std::size_t i, std::size_t j) { return a_[i * kMaxDim + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * kMaxDim + j]; }

    SymMatrix operator*(const SymMatrix& rhs) const;  // general product, result not symmetrized
    SymMatrix operator+(const SymMatrix& rhs) const;
    SymMatrix operator-(const SymMatrix& rhs) const;
    SymMatrix scaled(double s) const;
    SymMatrix transposed() const;

    double max_abs() const;
    double frobenius() const;

private:
    std::size_t n_;
    std::array<double, kMaxDim * kMaxDim> a_;
};

struct EigenDecomposition {
    std::vector<double> values;  // unsorted, paired with rows of `vectors`
    SymMatrix vectors;           // row s = unit eigenvector for values[s]
    int sweeps = 0;
};

// Cyclic Jacobi rotations; exact-to-roundoff for these sizes.
EigenDecomposition jacobi_eigen(const SymMatrix& a);

// A = sum_s values[s] * v_s v_s^T reconstruction (testing aid).
SymMatrix reconstruct(const EigenDecomposition& eig);

// Deterministic pseudo-random orthogonal matrix from composed Givens rotations.
SymMatrix random_orthogonal(std::size_t n, unsigned long long seed);

// Q^T A Q.
SymMatrix conjugate(const SymMatrix& a, const SymMatrix& q);

}  // namespace hcflow
