#include <cmath>
#include <vector>

#include "doctest.h"
#include "hcflow/curvature_operator.hpp"

using namespace hcflow;

namespace {

SymMatrix admissible_random(const CurvatureSpec& spec, unsigned long long seed) {
    const auto lams = sample_cone(spec, 1, seed);
    REQUIRE(!lams.empty());
    const SymMatrix d = SymMatrix::diagonal(lams[0]);
    const SymMatrix q = random_orthogonal(static_cast<std::size_t>(spec.n), seed * 7 + 1);
    return conjugate(d, q);
}

}  // namespace

TEST_CASE("jacobi eigensolver") {
    const std::vector<double> lam = {3.0, -0.5, 1.25, 0.75};
    const SymMatrix q = random_orthogonal(4, 99);
    const SymMatrix a = conjugate(SymMatrix::diagonal(lam), q);
    const auto eig = jacobi_eigen(a);
    std::vector<double> got = eig.values, want = lam;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    for (std::size_t i = 0; i < 4; ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
    CHECK((reconstruct(eig) - a).max_abs() < 1e-12);
}

TEST_CASE("operator at the identity") {
    const CurvatureSpec spec(3, 2, 1);
    const auto v = F_matrix_eval(spec, SymMatrix::identity(3));
    CHECK(v.value == doctest::Approx(1.0).epsilon(1e-13));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(v.gradient_matrix(i, j) ==
                  doctest::Approx(i == j ? 1.0 / 3.0 : 0.0).epsilon(1e-12));
}

TEST_CASE("mean curvature operator on a diagonal matrix") {
    const CurvatureSpec spec(3, 1, 0);
    const auto v = F_matrix_eval(spec, SymMatrix::diagonal({1.0, 2.0, 3.0}));
    CHECK(v.value == doctest::Approx(2.0).epsilon(1e-14));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(v.gradient_matrix(i, j) ==
                  doctest::Approx(i == j ? 1.0 / 3.0 : 0.0).epsilon(1e-13));
}

TEST_CASE("rotation invariance") {
    const CurvatureSpec spec(3, 2, 1);
    for (unsigned long long seed = 1; seed <= 20; ++seed) {
        const SymMatrix a = admissible_random(spec, seed);
        const SymMatrix q = random_orthogonal(3, seed + 1000);
        const double fa = F_matrix_eval(spec, a).value;
        const double fqa = F_matrix_eval(spec, conjugate(a, q)).value;
        CHECK(std::fabs(fa - fqa) < 1e-10);
    }
}

TEST_CASE("trace identities") {
    // sum F^{ij} a_ij = F and sum F^{ij} a_ik a_jk = sum f_i lambda_i^2
    const std::pair<int, int> pairs[] = {{2, 0}, {2, 1}, {3, 1}};
    for (auto [k, l] : pairs) {
        const CurvatureSpec spec(4, k, l);
        for (unsigned long long seed = 1; seed <= 10; ++seed) {
            const SymMatrix a = admissible_random(spec, seed * 31 + k);
            const auto v = F_matrix_eval(spec, a);

            double euler = 0.0;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) euler += v.gradient_matrix(i, j) * a(i, j);
            CHECK(euler == doctest::Approx(v.value).epsilon(1e-10));

            const SymMatrix a2 = a * a;
            double quad = 0.0;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) quad += v.gradient_matrix(i, j) * a2(i, j);
            double want = 0.0;
            for (std::size_t s = 0; s < 4; ++s)
                want += v.eigen_gradient[s] * v.eigenvalues[s] * v.eigenvalues[s];
            CHECK(quad == doctest::Approx(want).epsilon(1e-10));
        }
    }
}

TEST_CASE("gradient matrix matches matrix-entry finite differences at a degenerate point") {
    const CurvatureSpec spec(3, 2, 1);
    // repeated eigenvalue pair {2, 2, 1}, rotated
    const SymMatrix q = random_orthogonal(3, 5);
    const SymMatrix a = conjugate(SymMatrix::diagonal({2.0, 2.0, 1.0}), q);
    const auto v = F_matrix_eval(spec, a);

    auto F_of = [&](const SymMatrix& m) { return F_matrix_eval(spec, m).value; };
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            auto fd = [&](double t) {
                SymMatrix p = a, m = a;
                p(i, j) += t;
                m(i, j) -= t;
                if (i != j) {
                    p(j, i) += t;
                    m(j, i) -= t;
                }
                return (F_of(p) - F_of(m)) / (2.0 * t);
            };
            const double rich = (4.0 * fd(5e-6) - fd(1e-5)) / 3.0;
            const double want = (i == j) ? v.gradient_matrix(i, i)
                                         : 2.0 * v.gradient_matrix(i, j);
            CHECK(rich == doctest::Approx(want).epsilon(1e-6));
        }
}

TEST_CASE("inadmissible matrix rejected") {
    const CurvatureSpec spec(3, 2, 0);
    CHECK_THROWS_AS(F_matrix_eval(spec, SymMatrix::diagonal({-3.0, 1.0, 1.0})), ConeError);
}
