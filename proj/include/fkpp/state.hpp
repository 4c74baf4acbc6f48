#pragma once

#include "fkpp/sampled.hpp"

namespace fkpp {

// Discrete solution at one instant: u sampled on a uniform grid over [g, h].
// In one-boundary mode g == 0 and only h moves. dx is the target spacing;
// the realized spacing u.dx stays within a half-cell of it.
struct State {
    double t = 0.0;
    double g = 0.0;
    double h = 0.0;
    double dx = 0.0;
    SampledFunction u;
};

} // namespace fkpp
