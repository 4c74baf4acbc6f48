#include "fkpp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fkpp {

namespace {

void check_numerics(const NumericsConfig& num) {
    if (!(num.dx > 0.0) || !(num.dt > 0.0) || !(num.t_end > 0.0))
        throw std::invalid_argument("NumericsConfig: dx, dt, t_end must be positive");
    if (num.dt > num.dx)
        throw std::invalid_argument("NumericsConfig: dt <= dx required");
    if (num.sample_every < 1)
        throw std::invalid_argument("NumericsConfig: sample_every >= 1 required");
}

double logistic(const ReactionSpec& re, double u) {
    return re.r * u * (re.a - u);
}

// Thomas solve for a tridiagonal system with constant interior coefficients
//   -lam u[i-1] + (1+2lam) u[i] - lam u[i+1] = rhs[i],
// first row optionally carrying the mirrored Neumann ghost (-2lam on the
// superdiagonal). The right Dirichlet value 0 closes the last row.
void solve_interior(std::vector<double>& rhs, double lam, bool neumann_left,
                    std::vector<double>& cp) {
    const std::size_t n = rhs.size();
    cp.resize(n);
    const double diag = 1.0 + 2.0 * lam;
    const double off = -lam;
    const double sup0 = neumann_left ? -2.0 * lam : off;

    cp[0] = sup0 / diag;
    rhs[0] /= diag;
    for (std::size_t i = 1; i < n; ++i) {
        const double m = 1.0 / (diag - off * cp[i - 1]);
        cp[i] = off * m;
        rhs[i] = (rhs[i] - off * rhs[i - 1]) * m;
    }
    for (std::size_t i = n - 1; i-- > 0;)
        rhs[i] -= cp[i] * rhs[i + 1];
}

void enforce_positivity(std::vector<double>& v, double guard, double t) {
    for (double& x : v) {
        if (x < 0.0) {
            if (x < -guard)
                throw std::runtime_error("solver: negative density " + std::to_string(x) +
                                         " beyond positivity guard at t=" + std::to_string(t));
            x = 0.0;
        }
    }
}

TrajectoryRecord make_record(const State& st) {
    return {st.t, st.g, st.h, st.u.integral(), st.u.max_value()};
}

// Shared stepping core; boundary_speeds computes (g', h') from the old state.
template <typename BoundarySpeeds>
State advance(const State& state, const ProblemConfig& config, const NumericsConfig& num,
              BoundarySpeeds&& boundary_speeds, std::vector<double>& rhs,
              std::vector<double>& cp) {
    const bool two = config.two_sided();
    const std::size_t n_nodes = state.u.size();
    const double s = state.u.dx;
    const double dt = num.dt;

    auto [gp, hp] = boundary_speeds(state);
    double g_new = state.g + dt * gp;
    double h_new = state.h + dt * hp;
    // Keep a sliver of domain alive when the range collapses; the density
    // decays to zero there and the boundaries stall on their own.
    if (h_new - g_new < 3.0 * state.dx) {
        g_new = state.g;
        h_new = state.h;
    }

    // Interior solve on the old grid. Left end: Neumann mirror (one-boundary)
    // or Dirichlet (two-boundary). Right end: Dirichlet.
    const std::size_t first = two ? 1 : 0;
    const std::size_t n_unknown = n_nodes - 1 - first;
    rhs.resize(n_unknown);
    for (std::size_t i = 0; i < n_unknown; ++i) {
        const double u = state.u.values[first + i];
        rhs[i] = u + dt * logistic(config.reaction, u);
    }
    const double lam = dt * config.D / (s * s);
    solve_interior(rhs, lam, !two, cp);

    std::vector<double> vals(n_nodes);
    if (two) vals[0] = 0.0;
    std::copy(rhs.begin(), rhs.end(), vals.begin() + static_cast<std::ptrdiff_t>(first));
    vals[n_nodes - 1] = 0.0;
    enforce_positivity(vals, num.positivity_guard, state.t);

    State out;
    out.t = state.t + dt;
    out.g = g_new;
    out.h = h_new;
    out.dx = state.dx;
    out.u = regrid(SampledFunction(state.g, s, std::move(vals)), g_new, h_new, state.dx);
    out.u.values.back() = 0.0;
    if (two) out.u.values.front() = 0.0;
    return out;
}

std::pair<double, double> nonlocal_speeds(const State& st, const ProblemConfig& config) {
    const double hp = boundary_functional(st.u, *config.kernel_right, Side::Right, config.mu);
    double gp = 0.0;
    if (config.two_sided())
        gp = boundary_functional(st.u, *config.kernel_left, Side::Left, config.mu);
    return {gp, hp};
}

std::pair<double, double> stefan_speeds(const State& st, const ProblemConfig& config) {
    // One-sided second-order flux with u(h) = 0:
    // u_x(h) ~ (u[N-2] - 4 u[N-1]) / (2 dx).
    const auto& v = st.u.values;
    const std::size_t n = v.size();
    const double ux = (v[n - 3] - 4.0 * v[n - 2]) / (2.0 * st.u.dx);
    return {0.0, -config.mu * ux};
}

void require_valid(const ProblemConfig& config) {
    auto violations = validate(config);
    // The solver accepts degenerate kernel amplitudes (c1 == c2): the kernel
    // stays evaluable and parameter sweeps legitimately probe that edge.
    std::erase_if(violations, [&](const std::string& v) {
        if (v.find("c1>c2 required") == std::string::npos) return false;
        const bool right_ok =
            !config.kernel_right || config.kernel_right->c1 >= config.kernel_right->c2;
        const bool left_ok =
            !config.kernel_left || config.kernel_left->c1 >= config.kernel_left->c2;
        return right_ok && left_ok;
    });
    if (!violations.empty()) {
        std::string msg = "invalid config:";
        for (const auto& v : violations) msg += " [" + v + "]";
        throw std::invalid_argument(msg);
    }
}

template <typename BoundarySpeeds>
Trajectory run(const ProblemConfig& config, const NumericsConfig& num,
               BoundarySpeeds&& speeds) {
    check_numerics(num);
    State st = build_initial_state(config, num.dx);

    std::vector<double> snap_times = num.snapshot_times;
    std::sort(snap_times.begin(), snap_times.end());
    std::size_t next_snap = 0;

    Trajectory traj;
    const auto n_steps = static_cast<long long>(std::llround(num.t_end / num.dt));
    traj.records.reserve(static_cast<std::size_t>(n_steps / num.sample_every) + 2);
    traj.records.push_back(make_record(st));
    while (next_snap < snap_times.size() && snap_times[next_snap] <= st.t) {
        traj.snapshots.push_back({st.t, st.u});
        ++next_snap;
    }

    std::vector<double> rhs, cp;
    for (long long i = 1; i <= n_steps; ++i) {
        st = advance(st, config, num, speeds, rhs, cp);
        if (i % num.sample_every == 0 || i == n_steps)
            traj.records.push_back(make_record(st));
        while (next_snap < snap_times.size() && snap_times[next_snap] <= st.t + 1e-12) {
            traj.snapshots.push_back({st.t, st.u});
            ++next_snap;
        }
    }
    return traj;
}

} // namespace

SampledFunction regrid(const SampledFunction& u, double g_new, double h_new, double dx) {
    if (!(h_new > g_new)) throw std::invalid_argument("regrid: empty interval");
    if (!(dx > 0.0)) throw std::invalid_argument("regrid: dx must be positive");
    const double len = h_new - g_new;
    const auto cells = std::max<long long>(2, std::llround(len / dx));
    const double s = len / static_cast<double>(cells);
    std::vector<double> vals(static_cast<std::size_t>(cells) + 1);
    for (std::size_t i = 0; i < vals.size(); ++i)
        vals[i] = u(g_new + s * static_cast<double>(i));
    return SampledFunction(g_new, s, std::move(vals));
}

State step(const State& state, const ProblemConfig& config, const NumericsConfig& num) {
    std::vector<double> rhs, cp;
    if (config.boundary_rule == BoundaryRule::Stefan)
        return advance(state, config, num,
                       [&](const State& st) { return stefan_speeds(st, config); }, rhs, cp);
    return advance(state, config, num,
                   [&](const State& st) { return nonlocal_speeds(st, config); }, rhs, cp);
}

Trajectory simulate(const ProblemConfig& config, const NumericsConfig& num) {
    require_valid(config);
    if (config.boundary_rule != BoundaryRule::Nonlocal)
        throw std::invalid_argument("simulate: Nonlocal rule required (use simulate_stefan)");
    return run(config, num, [&](const State& st) { return nonlocal_speeds(st, config); });
}

Trajectory simulate_stefan(const ProblemConfig& config, const NumericsConfig& num) {
    require_valid(config);
    if (config.boundary_rule != BoundaryRule::Stefan)
        throw std::invalid_argument("simulate_stefan: Stefan rule required");
    return run(config, num, [&](const State& st) { return stefan_speeds(st, config); });
}

Trajectory simulate_scaled(const ProblemConfig& config, const NumericsConfig& num) {
    require_valid(config);
    check_numerics(num);
    if (config.two_sided())
        throw std::invalid_argument("simulate_scaled: one-boundary mode only");
    if (config.boundary_rule != BoundaryRule::Nonlocal)
        throw std::invalid_argument("simulate_scaled: Nonlocal rule required");

    const State init = build_initial_state(config, num.dx);
    const std::size_t cells = init.u.size() - 1;
    const double dy = 1.0 / static_cast<double>(cells);
    std::vector<double> v = init.u.values; // v(y) = u(h y); initial grid maps 1:1
    double h = config.h0;
    double t = 0.0;

    Trajectory traj;
    const auto n_steps = static_cast<long long>(std::llround(num.t_end / num.dt));
    auto record = [&]() {
        SampledFunction ux(0.0, h * dy, v);
        traj.records.push_back({t, 0.0, h, ux.integral(), ux.max_value()});
    };
    record();

    std::vector<double> rhs(cells), cp;
    for (long long i = 1; i <= n_steps; ++i) {
        const SampledFunction ux(0.0, h * dy, v);
        const double hp = boundary_functional(ux, *config.kernel_right, Side::Right, config.mu);
        const double a_t = config.D / (h * h);
        const double b_t = hp / h;

        rhs[0] = v[0] + num.dt * logistic(config.reaction, v[0]);
        for (std::size_t j = 1; j < cells; ++j) {
            const double y = dy * static_cast<double>(j);
            const double adv = b_t * y * (v[j + 1] - v[j - 1]) / (2.0 * dy);
            rhs[j] = v[j] + num.dt * (adv + logistic(config.reaction, v[j]));
        }
        const double lam = num.dt * a_t / (dy * dy);
        solve_interior(rhs, lam, true, cp);
        std::copy(rhs.begin(), rhs.end(), v.begin());
        v.back() = 0.0;
        enforce_positivity(v, num.positivity_guard, t);

        h += num.dt * hp;
        t += num.dt;
        if (i % num.sample_every == 0 || i == n_steps) record();
    }
    return traj;
}

} // namespace fkpp
