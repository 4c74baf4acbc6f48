#pragma once

#include <optional>
#include <vector>

#include "fkpp/kernels.hpp"
#include "fkpp/sampled.hpp"

namespace fkpp {

// int_0^h w_n(x) f(h-x) dx with the piecewise-linear f integrated exactly
// against each exponential. f must be sampled on [0, h_plus] with h_plus >= h
// and h on a sample node.
//
// Since w_n = S_n' with S_n a delta sequence of mass 1-1/n at 0+, integration
// by parts gives int_0^h w_n(x) f(h-x) dx -> +f'(h) as n grows (the chain
// rule flips the sign: d/dx f(h-x) = -f'(h-x)). For f(x)=x the value is
// 1-1/n up to an exponentially small tail, so the limit is +1, not -1. The
// delta-derivative kernel therefore does NOT reproduce the Stefan flux
// -f'(h); it produces its negative.
double wn_functional(int n, const SampledFunction& f, double h);

struct ConvergenceRow {
    int n;
    double value;
    double target;    // -f'(h), the Stefan flux the construction aims at
    double abs_error;
};

// Tabulates wn_functional against the Stefan flux -f'(h). The derivative at
// h is the given analytic value when supplied, otherwise a one-sided
// second-order finite difference of the samples. Because the functional in
// fact converges to +f'(h), the tabulated error converges to 2|f'(h)| and
// exposes the sign discrepancy whenever f'(h) != 0.
std::vector<ConvergenceRow> convergence_study(const SampledFunction& f, double h,
                                              const std::vector<int>& ns,
                                              std::optional<double> fprime_at_h = std::nullopt);

} // namespace fkpp
