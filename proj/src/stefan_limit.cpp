#include "fkpp/stefan_limit.hpp"

#include <cmath>
#include <stdexcept>

namespace fkpp {

namespace {

// Restriction of f to [x0, h]; h must land on a sample node.
SampledFunction crop_to(const SampledFunction& f, double h) {
    const double cells_exact = (h - f.x0) / f.dx;
    const auto cells = std::llround(cells_exact);
    if (cells < 1 || std::abs(cells_exact - static_cast<double>(cells)) > 1e-9)
        throw std::invalid_argument("wn_functional: h must be a sample node of f");
    if (static_cast<std::size_t>(cells) >= f.size())
        throw std::invalid_argument("wn_functional: h outside the support of f");
    if (static_cast<std::size_t>(cells) + 1 == f.size()) return f;
    std::vector<double> vals(f.values.begin(), f.values.begin() + cells + 1);
    return SampledFunction(f.x0, f.dx, std::move(vals));
}

} // namespace

double wn_functional(int n, const SampledFunction& f, double h) {
    if (n < 1) throw std::invalid_argument("wn_functional: n >= 1 required");
    const SampledFunction g = crop_to(f, h);
    if (n == 1) return 0.0; // w_1 is identically zero
    // int_0^h w_n(x) f(h-x) dx = int_0^h f(x) w_n(h-x) dx, which is the
    // right-side boundary functional with the delta-sequence kernel.
    return boundary_functional(g, delta_seq_params(n), Side::Right, 1.0);
}

std::vector<ConvergenceRow> convergence_study(const SampledFunction& f, double h,
                                              const std::vector<int>& ns,
                                              std::optional<double> fprime_at_h) {
    double fp;
    if (fprime_at_h) {
        fp = *fprime_at_h;
    } else {
        const SampledFunction g = crop_to(f, h);
        const auto& v = g.values;
        const std::size_t m = v.size();
        if (m < 3) throw std::invalid_argument("convergence_study: too few samples for f'(h)");
        fp = (3.0 * v[m - 1] - 4.0 * v[m - 2] + v[m - 3]) / (2.0 * g.dx);
    }
    std::vector<ConvergenceRow> rows;
    rows.reserve(ns.size());
    for (int n : ns) {
        const double val = wn_functional(n, f, h);
        rows.push_back({n, val, -fp, std::abs(val + fp)});
    }
    return rows;
}

} // namespace fkpp
