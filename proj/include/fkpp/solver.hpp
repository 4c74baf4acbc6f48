#pragma once

#include <vector>

#include "fkpp/problem.hpp"
#include "fkpp/state.hpp"

namespace fkpp {

struct NumericsConfig {
    double dx = 0.01;
    double dt = 1e-3;
    double t_end = 200.0;
    int sample_every = 100;
    double positivity_guard = 1e-9;
    std::vector<double> snapshot_times;
};

struct TrajectoryRecord {
    double t;
    double g;
    double h;
    double mass;
    double umax;
};

struct Snapshot {
    double t;
    SampledFunction u;
};

struct Trajectory {
    std::vector<TrajectoryRecord> records;
    std::vector<Snapshot> snapshots;
};

// Resamples the piecewise-linear profile onto a uniform grid over
// [g_new, h_new] with spacing as close to dx as the interval allows;
// points outside the old support take value 0.
SampledFunction regrid(const SampledFunction& u, double g_new, double h_new, double dx);

// One step of the moving-boundary scheme: boundary update from the old
// state, implicit diffusion with explicit reaction on the old grid, regrid.
State step(const State& state, const ProblemConfig& config, const NumericsConfig& num);

// Nonlocal boundary rule, one or two boundaries depending on config.
Trajectory simulate(const ProblemConfig& config, const NumericsConfig& num);

// Stefan rule h' = -mu u_x(t, h); one boundary.
Trajectory simulate_stefan(const ProblemConfig& config, const NumericsConfig& num);

// Cross-check integrator in the boundary-fixing frame y = x/h(t);
// one boundary only.
Trajectory simulate_scaled(const ProblemConfig& config, const NumericsConfig& num);

} // namespace fkpp
