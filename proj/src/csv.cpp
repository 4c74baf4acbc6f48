#include "fkpp/csv.hpp"

#include <cstdio>

namespace fkpp {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    out << "t,g,h,mass,umax\n";
    for (const auto& r : traj.records)
        out << format_double(r.t) << ',' << format_double(r.g) << ','
            << format_double(r.h) << ',' << format_double(r.mass) << ','
            << format_double(r.umax) << '\n';
}

void write_profile_csv(std::ostream& out, const Snapshot& snap) {
    out << "# t=" << format_double(snap.t) << "\n";
    out << "x,u\n";
    for (std::size_t i = 0; i < snap.u.size(); ++i)
        out << format_double(snap.u.x_at(i)) << ',' << format_double(snap.u.values[i]) << '\n';
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "knob_value,class,h_limit,rho_left,rho_right\n";
    for (const auto& row : rows) {
        out << format_double(row.knob_value) << ',' << to_string(row.outcome.cls) << ',';
        if (row.outcome.h_limit) out << format_double(*row.outcome.h_limit);
        out << ',';
        if (row.outcome.rho_left) out << format_double(*row.outcome.rho_left);
        out << ',';
        if (row.outcome.rho_right) out << format_double(*row.outcome.rho_right);
        out << '\n';
    }
}

void write_limit_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
    out << "n,value,target,abs_error\n";
    for (const auto& r : rows)
        out << r.n << ',' << format_double(r.value) << ',' << format_double(r.target)
            << ',' << format_double(r.abs_error) << '\n';
}

void write_fscan_csv(std::ostream& out, const std::vector<std::pair<double, double>>& rows) {
    out << "h,F\n";
    for (const auto& [h, F] : rows)
        out << format_double(h) << ',' << format_double(F) << '\n';
}

} // namespace fkpp
