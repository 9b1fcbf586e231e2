#include "hcflow/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hcflow {

CubicInterpolant::CubicInterpolant(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 4 || y_.size() != n)
        throw std::invalid_argument("CubicInterpolant: need >= 4 matching samples");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(x_[i] < x_[i + 1]))
            throw std::invalid_argument("CubicInterpolant: abscissa must increase strictly");

    m_.resize(n);
    // fourth-order centered slopes in the interior (uniform-ish spacing
    // assumed only for the order; the formula below is exact for cubics on
    // any spacing), one-sided second-order at the ends
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= 2 && i + 2 < n) {
            // five-point slope via two centered estimates and Richardson
            const double d1 = (y_[i + 1] - y_[i - 1]) / (x_[i + 1] - x_[i - 1]);
            const double d2 = (y_[i + 2] - y_[i - 2]) / (x_[i + 2] - x_[i - 2]);
            m_[i] = (4.0 * d1 - d2) / 3.0;
        } else if (i >= 1 && i + 1 < n) {
            m_[i] = (y_[i + 1] - y_[i - 1]) / (x_[i + 1] - x_[i - 1]);
        } else if (i == 0) {
            const double h0 = x_[1] - x_[0];
            const double h1 = x_[2] - x_[1];
            m_[i] = -(2.0 * h0 + h1) / (h0 * (h0 + h1)) * y_[0] +
                    (h0 + h1) / (h0 * h1) * y_[1] - h0 / (h1 * (h0 + h1)) * y_[2];
        } else {
            const double h0 = x_[n - 2] - x_[n - 3];
            const double h1 = x_[n - 1] - x_[n - 2];
            m_[i] = h1 / (h0 * (h0 + h1)) * y_[n - 3] - (h0 + h1) / (h0 * h1) * y_[n - 2] +
                    (2.0 * h1 + h0) / (h1 * (h0 + h1)) * y_[n - 1];
        }
    }

    // Fritsch-Carlson limiting against the secant slopes
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double delta = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
        if (delta == 0.0) {
            m_[i] = 0.0;
            m_[i + 1] = 0.0;
            continue;
        }
        const double alpha = m_[i] / delta;
        const double beta = m_[i + 1] / delta;
        if (alpha < 0.0) m_[i] = 0.0;
        if (beta < 0.0) m_[i + 1] = 0.0;
        const double r = alpha * alpha + beta * beta;
        if (r > 9.0) {
            const double tau = 3.0 / std::sqrt(r);
            m_[i] = tau * alpha * delta;
            m_[i + 1] = tau * beta * delta;
        }
    }
}

std::size_t CubicInterpolant::locate(double x) const {
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = static_cast<std::size_t>(std::distance(x_.begin(), it));
    if (i == 0) return 0;
    if (i >= x_.size()) return x_.size() - 2;
    return i - 1;
}

double CubicInterpolant::operator()(double x) const {
    const std::size_t i = locate(x);
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    return h00 * y_[i] + h10 * h * m_[i] + h01 * y_[i + 1] + h11 * h * m_[i + 1];
}

double CubicInterpolant::derivative(double x) const {
    const std::size_t i = locate(x);
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double t2 = t * t;
    const double dh00 = (6.0 * t2 - 6.0 * t) / h;
    const double dh10 = 3.0 * t2 - 4.0 * t + 1.0;
    const double dh01 = (-6.0 * t2 + 6.0 * t) / h;
    const double dh11 = 3.0 * t2 - 2.0 * t;
    return dh00 * y_[i] + dh10 * m_[i] + dh01 * y_[i + 1] + dh11 * m_[i + 1];
}

}  // namespace hcflow
