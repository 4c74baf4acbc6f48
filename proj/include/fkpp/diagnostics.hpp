#pragma once

#include <optional>
#include <string>

#include "fkpp/problem.hpp"
#include "fkpp/solver.hpp"

namespace fkpp {

enum class OutcomeClass { Vanishing, Balancing, Spreading, Undetermined };

std::string to_string(OutcomeClass c);

// Long-time classification of a trajectory with any fitted speeds.
struct Outcome {
    OutcomeClass cls = OutcomeClass::Undetermined;
    std::optional<double> h_limit;
    std::optional<double> rho_left;
    std::optional<double> rho_right;
};

struct SpeedFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0; // RMS deviation from the fitted line
};

// Least-squares line through the last tail_fraction of (t, boundary) samples.
SpeedFit fit_speed(const Trajectory& traj, Side side, double tail_fraction);

// Trichotomy classification at the trajectory's horizon. Thresholds:
// vanishing when umax < 1e-3*a with bounded boundaries (or h <= critical
// length outright), spreading when a tail slope reaches 0.01 with umax
// within 5% of a, balancing when all slopes are < 1e-3 with umax >= 10% of a.
Outcome classify(const Trajectory& traj, const ProblemConfig& config,
                 const NumericsConfig& num);

enum class Knob { c1, c2, alpha1, alpha2, h0, beta };

std::optional<Knob> knob_from_string(const std::string& name);
std::string to_string(Knob k);

// Returns a copy of base with the knob set. In two-boundary mode the kernel
// knobs bind to the left kernel G, matching the config-file convention.
ProblemConfig with_knob(const ProblemConfig& base, Knob knob, double value);

// Bisection on the knob between two outcome classes. The bracket width
// stops at 0.01 (0.002 for h0).
double find_threshold(const ProblemConfig& base, const NumericsConfig& num, Knob knob,
                      double lo, double hi, OutcomeClass class_lo, OutcomeClass class_hi);

} // namespace fkpp
