#pragma once

#include <cstddef>
#include <vector>

namespace fkpp {

// Uniformly sampled function on [x0, x0 + dx*(n-1)], interpreted as
// piecewise linear between nodes and zero outside its support.
struct SampledFunction {
    double x0 = 0.0;
    double dx = 0.0;
    std::vector<double> values;

    SampledFunction() = default;
    SampledFunction(double x0_, double dx_, std::vector<double> values_);

    std::size_t size() const { return values.size(); }
    double x_at(std::size_t i) const { return x0 + dx * static_cast<double>(i); }
    double x_end() const { return x0 + dx * static_cast<double>(values.size() - 1); }
    double length() const { return dx * static_cast<double>(values.size() - 1); }

    // Linear interpolation; returns 0 outside [x0, x_end].
    double operator()(double x) const;

    // Trapezoid rule, exact for the piecewise-linear interpretation.
    double integral() const;

    double max_value() const;
};

} // namespace fkpp
