#pragma once

#include <vector>

namespace hcflow {

// Cubic Hermite interpolant on a strictly increasing abscissa with
// fourth-order centered slope estimates and a Fritsch-Carlson limiter.
// The limiter never activates on smooth monotone data, so the interpolant
// keeps near-quartic accuracy where the radial resampling uses it.
class CubicInterpolant {
public:
    CubicInterpolant() = default;
    CubicInterpolant(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    double derivative(double x) const;

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

private:
    std::size_t locate(double x) const;

    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> m_;  // node slopes
};

}  // namespace hcflow
