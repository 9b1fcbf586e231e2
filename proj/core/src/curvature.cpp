#include "hcflow/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace hcflow {

CurvatureSpec::CurvatureSpec(int n, int k, int l) : n(n), k(k), l(l) {
    if (n < 1) throw std::invalid_argument("CurvatureSpec: n must be >= 1");
    if (k < 1 || k > n) throw std::invalid_argument("CurvatureSpec: need 1 <= k <= n");
    if (l < 0 || l >= k) throw std::invalid_argument("CurvatureSpec: need 0 <= l < k");
}

double binomial(int n, int m) {
    if (m < 0 || m > n) return 0.0;
    double c = 1.0;
    m = std::min(m, n - m);
    for (int i = 1; i <= m; ++i) c = c * static_cast<double>(n - m + i) / static_cast<double>(i);
    return c;  // exact in double for n <= 8
}

std::vector<double> elementary_symmetric(const std::vector<double>& lambda, int m) {
    std::vector<double> e(static_cast<std::size_t>(m) + 1, 0.0);
    e[0] = 1.0;
    int used = 0;
    for (double x : lambda) {
        ++used;
        for (int j = std::min(m, used); j >= 1; --j) e[j] += x * e[j - 1];
    }
    return e;
}

double normalized_symmetric(const std::vector<double>& lambda, int m) {
    const int n = static_cast<int>(lambda.size());
    if (m < 0 || m > n) throw std::domain_error("normalized_symmetric: m out of range");
    if (m == 0) return 1.0;
    return elementary_symmetric(lambda, m)[m] / binomial(n, m);
}

bool cone_contains(const CurvatureSpec& spec, const std::vector<double>& lambda) {
    if (static_cast<int>(lambda.size()) != spec.n) return false;
    double norm = 0.0;
    for (double x : lambda) norm += x * x;
    norm = std::sqrt(norm);

    const auto e = elementary_symmetric(lambda, spec.k);
    double norm_pow = 1.0;
    for (int j = 1; j <= spec.k; ++j) {
        norm_pow *= norm;
        const double hj = e[j] / binomial(spec.n, j);
        if (!(hj > 1e-12 * (1.0 + norm_pow))) return false;
    }
    return true;
}

double f_eval(const CurvatureSpec& spec, const std::vector<double>& lambda) {
    if (!cone_contains(spec, lambda))
        throw ConeError("f_eval: principal curvatures outside the admissibility cone");
    const auto e = elementary_symmetric(lambda, spec.k);
    const double hk = e[spec.k] / binomial(spec.n, spec.k);
    const double hl = (spec.l == 0) ? 1.0 : e[spec.l] / binomial(spec.n, spec.l);
    return std::pow(hk / hl, 1.0 / static_cast<double>(spec.k - spec.l));
}

namespace {

// d e_m / d lambda_i = e_{m-1} of lambda with entry i removed.
double deleted_elementary(const std::vector<double>& lambda, std::size_t skip, int m) {
    std::vector<double> e(static_cast<std::size_t>(m) + 1, 0.0);
    e[0] = 1.0;
    int used = 0;
    for (std::size_t idx = 0; idx < lambda.size(); ++idx) {
        if (idx == skip) continue;
        ++used;
        for (int j = std::min(m, used); j >= 1; --j) e[j] += lambda[idx] * e[j - 1];
    }
    return e[m];
}

}  // namespace

std::vector<double> f_grad(const CurvatureSpec& spec, const std::vector<double>& lambda) {
    if (!cone_contains(spec, lambda))
        throw ConeError("f_grad: principal curvatures outside the admissibility cone");

    const double f = f_eval(spec, lambda);
    const auto e = elementary_symmetric(lambda, spec.k);
    const double ek = e[spec.k];
    const double el = (spec.l == 0) ? 1.0 : e[spec.l];

    std::vector<double> grad(lambda.size());
    const double p = 1.0 / static_cast<double>(spec.k - spec.l);
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        const double dek = deleted_elementary(lambda, i, spec.k - 1);
        const double del = (spec.l == 0) ? 0.0 : deleted_elementary(lambda, i, spec.l - 1);
        // d log f = p * (d log H_k - d log H_l); binomials cancel in the log derivative
        grad[i] = f * p * (dek / ek - del / el);
    }
    return grad;
}

StructureReport verify_structure(const CurvatureSpec& spec,
                                 const std::vector<std::vector<double>>& samples,
                                 double tol) {
    StructureReport rep;
    rep.samples = static_cast<int>(samples.size());

    const std::vector<double> ones(static_cast<std::size_t>(spec.n), 1.0);
    rep.normalization_error = std::fabs(f_eval(spec, ones) - 1.0);
    rep.normalization_ok = rep.normalization_error <= tol;

    rep.min_gradient_entry = 1e300;
    rep.worst_concavity_margin = 1e300;
    rep.min_f = 1e300;
    rep.worst_homogeneity_error = 0.0;
    rep.worst_mean_bound_margin = 1e300;
    rep.worst_grad_sum_margin = 1e300;
    rep.worst_euler_error = 0.0;

    const double homogeneity_factors[] = {0.5, 2.0, 5.0};

    for (std::size_t s = 0; s < samples.size(); ++s) {
        const auto& lam = samples[s];
        const double f = f_eval(spec, lam);
        const auto g = f_grad(spec, lam);

        rep.min_f = std::min(rep.min_f, f);
        double gsum = 0.0, euler = 0.0, h1 = 0.0;
        for (std::size_t i = 0; i < lam.size(); ++i) {
            rep.min_gradient_entry = std::min(rep.min_gradient_entry, g[i]);
            gsum += g[i];
            euler += g[i] * lam[i];
            h1 += lam[i];
        }
        h1 /= static_cast<double>(spec.n);

        rep.worst_grad_sum_margin = std::min(rep.worst_grad_sum_margin, gsum - 1.0);
        rep.worst_mean_bound_margin = std::min(rep.worst_mean_bound_margin, h1 - f);
        rep.worst_euler_error =
            std::max(rep.worst_euler_error, std::fabs(euler - f) / std::max(1.0, std::fabs(f)));

        for (double t : homogeneity_factors) {
            std::vector<double> scaled(lam);
            for (double& x : scaled) x *= t;
            const double err = std::fabs(f_eval(spec, scaled) - t * f) / (t * f);
            rep.worst_homogeneity_error = std::max(rep.worst_homogeneity_error, err);
        }

        // midpoint concavity against the next sample in the list
        const auto& mu = samples[(s + 1) % samples.size()];
        std::vector<double> mid(lam.size());
        for (std::size_t i = 0; i < lam.size(); ++i) mid[i] = 0.5 * (lam[i] + mu[i]);
        if (cone_contains(spec, mid)) {
            const double margin = f_eval(spec, mid) - 0.5 * (f + f_eval(spec, mu));
            rep.worst_concavity_margin = std::min(rep.worst_concavity_margin, margin);
        }
    }

    rep.monotonicity_ok = rep.min_gradient_entry > 0.0;
    rep.concavity_ok = rep.worst_concavity_margin >= -tol;
    rep.positivity_ok = rep.min_f > 0.0;
    rep.homogeneity_ok = rep.worst_homogeneity_error <= tol;
    rep.mean_bound_ok = rep.worst_mean_bound_margin >= -tol;
    rep.grad_sum_ok = rep.worst_grad_sum_margin >= -tol;
    rep.euler_ok = rep.worst_euler_error <= tol;

    // Large-entry limit probe near the diagonal point: f(lambda + R e_n)
    // must rise above 1 and keep rising with R.
    rep.limit_probe_value = 1e300;
    rep.limit_probe_increasing = true;
    const double radii[] = {1.0, 10.0, 100.0, 1000.0};
    const double offsets[] = {-0.05, 0.0, 0.05};
    for (double d1 : offsets) {
        for (double d2 : offsets) {
            std::vector<double> base(ones);
            base[0] += d1;
            if (spec.n > 1) base[1] += d2;
            double prev = -1e300;
            double last = 0.0;
            for (double rr : radii) {
                std::vector<double> probe(base);
                probe.back() += rr;
                last = f_eval(spec, probe);
                if (last < prev - tol) rep.limit_probe_increasing = false;
                prev = last;
            }
            rep.limit_probe_value = std::min(rep.limit_probe_value, last);
        }
    }
    rep.limit_probe_ok = rep.limit_probe_increasing && rep.limit_probe_value > 1.0 + 1e-6;

    for (bool ok : {rep.monotonicity_ok, rep.concavity_ok, rep.positivity_ok,
                    rep.normalization_ok, rep.homogeneity_ok, rep.mean_bound_ok,
                    rep.grad_sum_ok, rep.euler_ok, rep.limit_probe_ok})
        if (!ok) ++rep.failures;
    return rep;
}

namespace {
double next_unit(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}
}  // namespace

std::vector<std::vector<double>> sample_cone(const CurvatureSpec& spec, int count,
                                             unsigned long long seed) {
    std::uint64_t state = seed;
    std::vector<std::vector<double>> out;
    out.reserve(static_cast<std::size_t>(count));
    int attempts = 0;
    while (static_cast<int>(out.size()) < count && attempts < 1000 * count) {
        ++attempts;
        std::vector<double> lam(static_cast<std::size_t>(spec.n));
        // half the draws from the positive box, half allowing negative entries
        const bool positive = next_unit(state) < 0.5;
        for (double& x : lam)
            x = positive ? 0.05 + 2.0 * next_unit(state) : -0.5 + 2.5 * next_unit(state);
        if (cone_contains(spec, lam)) out.push_back(std::move(lam));
    }
    return out;
}

}  // namespace hcflow
