#pragma once

#include <cstddef>
#include <vector>

#include "hcflow/errors.hpp"

namespace hcflow {

// The curvature function family f = (H_k/H_l)^{1/(k-l)} on the Garding cone
// Gamma_k, where H_m is the normalized m-th elementary symmetric polynomial.
// k = 1, l = 0 is the mean curvature; k = n, l = 0 the Gauss curvature.
// Everything in this header is a pure function of its arguments; all of it
// is safe to call from any number of threads.
struct CurvatureSpec {
    int n;  // hypersurface dimension
    int k;
    int l;

    CurvatureSpec(int n, int k, int l);
};

double binomial(int n, int m);

// e_0..e_m of lambda (plain, unnormalized), m <= lambda.size().
std::vector<double> elementary_symmetric(const std::vector<double>& lambda, int m);

// H_m(lambda) = e_m(lambda) / C(n, m); H_0 = 1. Throws std::domain_error
// when m is outside [0, n].
double normalized_symmetric(const std::vector<double>& lambda, int m);

// Gamma_k membership: H_j > tol * (1 + |lambda|^j) for 1 <= j <= k.
// The tolerance guards eigensolver roundoff near the cone boundary.
bool cone_contains(const CurvatureSpec& spec, const std::vector<double>& lambda);

// f(lambda); throws ConeError outside the cone.
double f_eval(const CurvatureSpec& spec, const std::vector<double>& lambda);

// Analytic gradient (f_1, ..., f_n); throws ConeError outside the cone.
// Entries are strictly positive on the cone and satisfy the Euler relation
// sum f_i lambda_i = f.
std::vector<double> f_grad(const CurvatureSpec& spec, const std::vector<double>& lambda);

// Structure-condition report over a list of in-cone samples: monotonicity,
// midpoint concavity, positivity, normalization, degree-one homogeneity,
// f <= H_1, sum f_i >= 1, Euler relation, and the large-entry limit probe
// f(lambda_1, ..., lambda_n + R) for growing R near the diagonal point.
struct StructureReport {
    int samples = 0;
    int failures = 0;

    // worst (most adverse) observed values; margins are >= 0 when all good
    double min_gradient_entry = 0.0;       // min over samples/entries of f_i
    double worst_concavity_margin = 0.0;   // f(mid) - (f(a)+f(b))/2
    double min_f = 0.0;                    // min f over samples
    double normalization_error = 0.0;      // |f(1,..,1) - 1|
    double worst_homogeneity_error = 0.0;  // max |f(t l) - t f(l)| / (t f(l))
    double worst_mean_bound_margin = 0.0;  // min of H_1 - f
    double worst_grad_sum_margin = 0.0;    // min of sum f_i - 1
    double worst_euler_error = 0.0;        // max |sum f_i l_i - f| / max(1, f)
    double limit_probe_value = 0.0;        // min over probes of f(l + R e_n) at largest R
    bool limit_probe_increasing = true;

    bool monotonicity_ok = false;
    bool concavity_ok = false;
    bool positivity_ok = false;
    bool normalization_ok = false;
    bool homogeneity_ok = false;
    bool mean_bound_ok = false;   // f <= H_1          (consequence of concavity)
    bool grad_sum_ok = false;     // sum f_i >= 1
    bool euler_ok = false;
    bool limit_probe_ok = false;  // probe exceeds 1 and grows with R

    bool all_ok() const {
        return monotonicity_ok && concavity_ok && positivity_ok && normalization_ok &&
               homogeneity_ok && mean_bound_ok && grad_sum_ok && euler_ok && limit_probe_ok;
    }
};

StructureReport verify_structure(const CurvatureSpec& spec,
                                 const std::vector<std::vector<double>>& samples,
                                 double tol = 1e-10);

// Deterministic in-cone sample generator (rejection from a box biased
// toward the positive cone).
std::vector<std::vector<double>> sample_cone(const CurvatureSpec& spec, int count,
                                             unsigned long long seed);

}  // namespace hcflow
