#include "hcflow/linalg.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace hcflow {

SymMatrix SymMatrix::identity(std::size_t n) {
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& d) {
    SymMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

SymMatrix SymMatrix::operator*(const SymMatrix& rhs) const {
    SymMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n_; ++k) s += (*this)(i, k) * rhs(k, j);
            out(i, j) = s;
        }
    return out;
}

SymMatrix SymMatrix::operator+(const SymMatrix& rhs) const {
    SymMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out(i, j) = (*this)(i, j) + rhs(i, j);
    return out;
}

SymMatrix SymMatrix::operator-(const SymMatrix& rhs) const {
    SymMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out(i, j) = (*this)(i, j) - rhs(i, j);
    return out;
}

SymMatrix SymMatrix::scaled(double s) const {
    SymMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out(i, j) = s * (*this)(i, j);
    return out;
}

SymMatrix SymMatrix::transposed() const {
    SymMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out(i, j) = (*this)(j, i);
    return out;
}

double SymMatrix::max_abs() const {
    double m = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m = std::max(m, std::fabs((*this)(i, j)));
    return m;
}

double SymMatrix::frobenius() const {
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * (*this)(i, j);
    return std::sqrt(s);
}

EigenDecomposition jacobi_eigen(const SymMatrix& input) {
    const std::size_t n = input.dim();
    if (n == 0 || n > SymMatrix::kMaxDim)
        throw std::invalid_argument("jacobi_eigen: dimension out of range");

    SymMatrix a = input;
    SymMatrix v = SymMatrix::identity(n);

    auto offdiag = [&]() {
        double s = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
        return s;
    };

    const double scale = std::max(1.0, input.max_abs());
    const double tol = 1e-30 * scale * scale;
    int sweeps = 0;
    while (offdiag() > tol && sweeps < 64) {
        ++sweeps;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::fabs(apq) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0)
                                     ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                                     : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vpk = v(p, k);
                    const double vqk = v(q, k);
                    v(p, k) = c * vpk - s * vqk;
                    v(q, k) = s * vpk + c * vqk;
                }
            }
        }
    }

    EigenDecomposition out;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i);
    out.vectors = v;  // row i is the eigenvector of values[i]
    out.sweeps = sweeps;
    return out;
}

SymMatrix reconstruct(const EigenDecomposition& eig) {
    const std::size_t n = eig.values.size();
    SymMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                s += eig.values[k] * eig.vectors(k, i) * eig.vectors(k, j);
            out(i, j) = s;
        }
    return out;
}

namespace {
// splitmix64; deterministic across platforms.
double next_unit(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}
}  // namespace

SymMatrix random_orthogonal(std::size_t n, unsigned long long seed) {
    std::uint64_t state = seed;
    SymMatrix q = SymMatrix::identity(n);
    // Three sweeps of random Givens rotations mix all planes.
    for (int sweep = 0; sweep < 3; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t r = p + 1; r < n; ++r) {
                const double ang = 2.0 * 3.14159265358979323846 * next_unit(state);
                const double c = std::cos(ang);
                const double s = std::sin(ang);
                for (std::size_t k = 0; k < n; ++k) {
                    const double qpk = q(p, k);
                    const double qrk = q(r, k);
                    q(p, k) = c * qpk - s * qrk;
                    q(r, k) = s * qpk + c * qrk;
                }
            }
        }
    }
    return q;
}

SymMatrix conjugate(const SymMatrix& a, const SymMatrix& q) {
    return q.transposed() * a * q;
}

}  // namespace hcflow
