#include "fkpp/sampled.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fkpp {

SampledFunction::SampledFunction(double x0_, double dx_, std::vector<double> values_)
    : x0(x0_), dx(dx_), values(std::move(values_)) {
    if (!(dx > 0.0)) throw std::invalid_argument("SampledFunction: dx must be positive");
    if (values.size() < 2) throw std::invalid_argument("SampledFunction: need at least 2 samples");
}

double SampledFunction::operator()(double x) const {
    const double s = (x - x0) / dx;
    const double n = static_cast<double>(values.size() - 1);
    // Snap roundoff at the support edges instead of dropping to zero.
    const double tol = 1e-9;
    if (s < -tol || s > n + tol) return 0.0;
    const double sc = std::clamp(s, 0.0, n);
    const auto i = static_cast<std::size_t>(std::min(sc, n - 1.0));
    const double frac = sc - static_cast<double>(i);
    return values[i] + frac * (values[i + 1] - values[i]);
}

double SampledFunction::integral() const {
    double sum = 0.5 * (values.front() + values.back());
    for (std::size_t i = 1; i + 1 < values.size(); ++i) sum += values[i];
    return sum * dx;
}

double SampledFunction::max_value() const {
    return *std::max_element(values.begin(), values.end());
}

} // namespace fkpp
