#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fkpp/kernels.hpp"
#include "fkpp/state.hpp"

namespace fkpp {

// Logistic reaction f(u) = r u (a - u). r = 0 switches growth off entirely.
struct ReactionSpec {
    double r = 1.0;
    double a = 5.0;
};

struct InitialCondition {
    enum class Kind { Polynomial, Tabulated };
    Kind kind = Kind::Polynomial;
    double beta = 0.01;        // u0(x) = beta (h0^2 - x^2)
    SampledFunction table;     // Kind::Tabulated only

    static InitialCondition polynomial(double beta);
    static InitialCondition tabulated(SampledFunction table);
};

enum class BoundaryRule { Nonlocal, Stefan };

struct ProblemConfig {
    double D = 1.0;
    double mu = 1.0;
    ReactionSpec reaction;
    std::optional<KernelParams> kernel_right; // one-boundary kernel w, or H in two-boundary mode
    std::optional<KernelParams> kernel_left;  // G in two-boundary mode
    double h0 = 0.0;
    std::optional<double> g0;                 // present => two-boundary mode
    BoundaryRule boundary_rule = BoundaryRule::Nonlocal;
    InitialCondition initial;

    bool two_sided() const { return g0.has_value(); }
};

// Sup bounds on the solution and the boundary speed:
// M = max(a, sup u0), K = mu*M*(c1/alpha1 + c2/alpha2).
struct RuntimeBounds {
    double M = 0.0;
    double K_right = 0.0;
    double K_left = 0.0; // 0 in one-boundary mode
};

// Checks every config invariant; returns the list of violations (empty = ok).
std::vector<std::string> validate(const ProblemConfig& config);

double initial_sup(const ProblemConfig& config);

// Samples u0 on a uniform grid over [0, h0] (or [g0, h0]); boundary node
// exactly zero. Throws std::invalid_argument when the grid is too coarse
// (fewer than 8 cells) or the initial data violates its invariants.
State build_initial_state(const ProblemConfig& config, double dx);

// A-priori sup and boundary-speed bounds; Nonlocal rule only.
RuntimeBounds a_priori_bounds(const ProblemConfig& config);

} // namespace fkpp
