#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "fkpp/diagnostics.hpp"
#include "fkpp/solver.hpp"
#include "fkpp/stefan_limit.hpp"

namespace fkpp {

// All writers use full %.17g precision so outputs are deterministic
// within a build and comparable with tolerance across builds.

// Header t,g,h,mass,umax; one row per sample.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

// Header x,u with a leading "# t=<value>" comment.
void write_profile_csv(std::ostream& out, const Snapshot& snap);

// Header knob_value,class,h_limit,rho_left,rho_right; empty cells for
// fields the outcome does not carry.
struct SweepRow {
    double knob_value;
    Outcome outcome;
};
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

// Header n,value,target,abs_error.
void write_limit_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);

// Header h,F.
void write_fscan_csv(std::ostream& out, const std::vector<std::pair<double, double>>& rows);

std::string format_double(double v);

} // namespace fkpp
