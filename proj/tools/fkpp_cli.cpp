// fkpp: command-line driver for the free-boundary Fisher-KPP toolkit.
//
// Subcommands: simulate, simulate2, stefan, scaled, sweep, threshold,
// steady, speed, limit-check. Each writes CSV artifacts into --out and
// optionally a self-contained SVG plot. Exit codes are listed in --help.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fkpp/config.hpp"
#include "fkpp/diagnostics.hpp"
#include "fkpp/solver.hpp"
#include "fkpp/steady.hpp"
#include "fkpp/stefan_limit.hpp"

using namespace fkpp;

namespace {

constexpr int kExitConfig = 2;   // config file errors
constexpr int kExitArgs = 3;     // invalid arguments / domain errors
constexpr int kExitCompute = 4;  // computation failed (no root, no solution)
constexpr int kExitIo = 5;       // filesystem / write errors

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot write " + path.string());
    out << content;
    if (!out) throw std::ios_base::failure("write failed on " + path.string());
}

// Deterministic dependency-free SVG line plot of one series.
std::string emit_svg(const std::vector<double>& xs, const std::vector<double>& ys,
                     const std::string& xlabel, const std::string& ylabel) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("emit_svg: need at least two points");
    const double xmin = *std::min_element(xs.begin(), xs.end());
    const double xmax = *std::max_element(xs.begin(), xs.end());
    const double ymax_data = *std::max_element(ys.begin(), ys.end());
    const double ymin_data = *std::min_element(ys.begin(), ys.end());
    const double ymin = ymin_data >= 0.0 ? 0.0 : ymin_data;
    const double ymax = ymax_data > ymin ? (ymin_data >= 0.0 ? 1.1 * ymax_data : ymax_data)
                                         : ymin + 1.0;
    const double xspan = xmax > xmin ? xmax - xmin : 1.0;
    const double yspan = ymax - ymin;
    const double W = 640, H = 400, L = 60, R = 15, T = 15, B = 45;
    auto px = [&](double x) { return L + (x - xmin) / xspan * (W - L - R); };
    auto py = [&](double y) { return H - B - (y - ymin) / yspan * (H - T - B); };
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" "
           "viewBox=\"0 0 640 400\">\n"
        << "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n"
        << "<line x1=\"" << fmt6(L) << "\" y1=\"" << fmt6(H - B) << "\" x2=\"" << fmt6(W - R)
        << "\" y2=\"" << fmt6(H - B) << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << fmt6(L) << "\" y1=\"" << fmt6(T) << "\" x2=\"" << fmt6(L)
        << "\" y2=\"" << fmt6(H - B) << "\" stroke=\"black\"/>\n";
    svg << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) svg << ' ';
        svg << fmt6(px(xs[i])) << ',' << fmt6(py(ys[i]));
    }
    svg << "\"/>\n";
    svg << "<text x=\"" << fmt6((L + W - R) / 2) << "\" y=\"" << fmt6(H - 10)
        << "\" text-anchor=\"middle\" font-size=\"13\">" << xlabel << "</text>\n"
        << "<text x=\"15\" y=\"" << fmt6((T + H - B) / 2)
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 15 "
        << fmt6((T + H - B) / 2) << ")\">" << ylabel << "</text>\n";
    // Tick labels at the axis extremes.
    svg << "<text x=\"" << fmt6(L) << "\" y=\"" << fmt6(H - B + 16)
        << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt6(xmin) << "</text>\n"
        << "<text x=\"" << fmt6(W - R) << "\" y=\"" << fmt6(H - B + 16)
        << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt6(xmax) << "</text>\n"
        << "<text x=\"" << fmt6(L - 5) << "\" y=\"" << fmt6(H - B + 4)
        << "\" text-anchor=\"end\" font-size=\"11\">" << fmt6(ymin) << "</text>\n"
        << "<text x=\"" << fmt6(L - 5) << "\" y=\"" << fmt6(T + 4)
        << "\" text-anchor=\"end\" font-size=\"11\">" << fmt6(ymax) << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

std::string trajectory_csv(const Trajectory& traj) {
    std::string csv = "t,g,h,mass,umax\n";
    for (const auto& r : traj.records)
        csv += fmt(r.t) + "," + fmt(r.g) + "," + fmt(r.h) + "," + fmt(r.mass) + "," +
               fmt(r.umax) + "\n";
    return csv;
}

std::string snapshot_csv(const Snapshot& snap) {
    std::string csv = "x,u\n";
    for (std::size_t i = 0; i < snap.u.size(); ++i)
        csv += fmt(snap.u.x_at(i)) + "," + fmt(snap.u.values[i]) + "\n";
    return csv;
}

void write_trajectory(const Trajectory& traj, const std::string& out_dir, bool svg) {
    const std::filesystem::path dir(out_dir);
    write_file(dir / "trajectory.csv", trajectory_csv(traj));
    for (const auto& snap : traj.snapshots) {
        char name[64];
        std::snprintf(name, sizeof name, "snapshot_t%.6g.csv", snap.t);
        write_file(dir / name, snapshot_csv(snap));
    }
    if (svg) {
        std::vector<double> ts, hs;
        for (const auto& r : traj.records) {
            ts.push_back(r.t);
            hs.push_back(r.h);
        }
        write_file(dir / "h_of_t.svg", emit_svg(ts, hs, "t", "h(t)"));
    }
    const auto& last = traj.records.back();
    std::cout << "t_end=" << fmt(last.t) << " g=" << fmt(last.g) << " h=" << fmt(last.h)
              << " mass=" << fmt(last.mass) << " umax=" << fmt(last.umax) << "\n";
}

OutcomeClass class_from_string(const std::string& s) {
    if (s == "vanishing") return OutcomeClass::Vanishing;
    if (s == "balancing") return OutcomeClass::Balancing;
    if (s == "spreading") return OutcomeClass::Spreading;
    throw std::invalid_argument("unknown outcome class '" + s +
                                "' (vanishing|balancing|spreading)");
}

struct CommonOpts {
    std::string config;
    std::string out = "out";
    bool svg = false;
    std::optional<double> t_end, dx, dt;
    std::vector<double> snapshot_times;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool snapshots = true) {
    cmd->add_option("--config", o.config, "problem config file")->required();
    cmd->add_option("--out", o.out, "output directory (default: out)");
    cmd->add_flag("--svg", o.svg, "also write an SVG plot");
    cmd->add_option("--t-end", o.t_end, "override t_end");
    cmd->add_option("--dx", o.dx, "override dx");
    cmd->add_option("--dt", o.dt, "override dt");
    if (snapshots)
        cmd->add_option("--snapshot", o.snapshot_times, "profile snapshot times (repeatable)");
}

std::pair<ProblemConfig, NumericsConfig> load(const CommonOpts& o) {
    auto [pc, nc] = parse_config(o.config);
    if (o.t_end) nc.t_end = *o.t_end;
    if (o.dx) nc.dx = *o.dx;
    if (o.dt) nc.dt = *o.dt;
    nc.snapshot_times = o.snapshot_times;
    return {pc, nc};
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "fkpp: Fisher-KPP population model with a nonlocal free boundary.\n"
        "Exit codes: 0 ok, 2 config error, 3 bad arguments, 4 computation\n"
        "failed (no root / no positive solution), 5 I/O error."};
    app.require_subcommand(1);

    CommonOpts sim_o, sim2_o, stefan_o, scaled_o, sweep_o, thr_o;

    auto* sim = app.add_subcommand("simulate", "one-boundary nonlocal run -> trajectory CSV");
    add_common(sim, sim_o);
    auto* sim2 = app.add_subcommand("simulate2", "two-boundary nonlocal run");
    add_common(sim2, sim2_o);
    auto* stf = app.add_subcommand("stefan", "Stefan-rule run h' = -mu u_x(t,h)");
    add_common(stf, stefan_o);
    auto* scl = app.add_subcommand("scaled", "fixed-frame cross-check integrator");
    add_common(scl, scaled_o);

    auto* swp = app.add_subcommand("sweep", "classify runs over a list of knob values");
    std::string sweep_knob;
    std::vector<double> sweep_values;
    add_common(swp, sweep_o, false);
    swp->add_option("--knob", sweep_knob, "c1|c2|alpha1|alpha2|h0|beta")->required();
    swp->add_option("--values", sweep_values, "knob values")->required()->delimiter(',');

    auto* thr = app.add_subcommand("threshold", "bisect a knob between two outcome classes");
    std::string thr_knob, thr_from = "vanishing", thr_to = "spreading";
    double thr_lo = 0.0, thr_hi = 0.0;
    add_common(thr, thr_o, false);
    thr->add_option("--knob", thr_knob, "c1|c2|alpha1|alpha2|h0|beta")->required();
    thr->add_option("--lo", thr_lo, "lower knob value")->required();
    thr->add_option("--hi", thr_hi, "upper knob value")->required();
    thr->add_option("--from", thr_from, "outcome class at --lo (default vanishing)");
    thr->add_option("--to", thr_to, "outcome class at --hi (default spreading)");

    auto* std_cmd = app.add_subcommand("steady", "scan the balance functional F(h) and locate its root");
    std::string std_config, std_out = "out";
    bool std_svg = false;
    double std_lo = 0.0, std_hi = 0.0, std_dx = 1e-3;
    int std_points = 50;
    std_cmd->add_option("--config", std_config, "problem config file")->required();
    std_cmd->add_option("--lo", std_lo, "scan start h")->required();
    std_cmd->add_option("--hi", std_hi, "scan end h")->required();
    std_cmd->add_option("--points", std_points, "scan points (default 50)");
    std_cmd->add_option("--dx", std_dx, "elliptic solver step (default 1e-3)");
    std_cmd->add_option("--out", std_out, "output directory");
    std_cmd->add_flag("--svg", std_svg, "also write an SVG plot");

    auto* spd = app.add_subcommand("speed", "asymptotic Stefan front speed k0");
    double spd_r = 1.0, spd_D = 1.0, spd_mu = 1.0, spd_a = 1.0;
    spd->add_option("--r", spd_r, "growth rate (default 1)");
    spd->add_option("--D", spd_D, "diffusivity (default 1)");
    spd->add_option("--mu", spd_mu, "boundary mobility (default 1)");
    spd->add_option("--a", spd_a, "carrying capacity (default 1)");

    auto* lim = app.add_subcommand("limit-check", "delta-kernel convergence table vs the Stefan flux");
    std::string lim_fn = "cos", lim_ns = "10,100,1000", lim_out = "out";
    double lim_h = 1.2;
    int lim_cells = 12000;
    lim->add_option("--fn", lim_fn, "test function: linear|cos (default cos)");
    lim->add_option("--h-end", lim_h, "endpoint h (default 1.2)");
    lim->add_option("--cells", lim_cells, "sample cells (default 12000)");
    lim->add_option("--ns", lim_ns, "comma list of n (default 10,100,1000)");
    lim->add_option("--out", lim_out, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sim || *sim2 || *stf || *scl) {
            const CommonOpts& o = *sim ? sim_o : *sim2 ? sim2_o : *stf ? stefan_o : scaled_o;
            auto [pc, nc] = load(o);
            if (*sim && pc.two_sided())
                throw std::invalid_argument("simulate: config is two-boundary; use simulate2");
            if (*sim2 && !pc.two_sided())
                throw std::invalid_argument("simulate2: config is not two-boundary");
            const Trajectory traj = *stf   ? simulate_stefan(pc, nc)
                                    : *scl ? simulate_scaled(pc, nc)
                                           : simulate(pc, nc);
            write_trajectory(traj, o.out, o.svg);
            try {
                const Outcome out = classify(traj, pc, nc);
                std::cout << "class=" << to_string(out.cls);
                if (out.h_limit) std::cout << " h_limit=" << fmt(*out.h_limit);
                if (out.rho_left) std::cout << " rho_left=" << fmt(*out.rho_left);
                if (out.rho_right) std::cout << " rho_right=" << fmt(*out.rho_right);
                std::cout << "\n";
            } catch (const std::invalid_argument& e) {
                // Too few samples for a speed fit; artifacts are still valid.
                std::cout << "class=unavailable (" << e.what() << ")\n";
            }
        } else if (*swp) {
            auto [pc, nc] = load(sweep_o);
            const auto knob = knob_from_string(sweep_knob);
            if (!knob) throw std::invalid_argument("unknown knob '" + sweep_knob + "'");
            if (sweep_values.size() < 2)
                throw std::invalid_argument("sweep: need at least two values");
            std::string csv = "knob_value,class,h_limit,rho_left,rho_right\n";
            std::vector<double> xs, rhos;
            for (double v : sweep_values) {
                const ProblemConfig probe = with_knob(pc, *knob, v);
                const Outcome out = classify(simulate(probe, nc), probe, nc);
                csv += fmt(v) + "," + to_string(out.cls) + "," +
                       (out.h_limit ? fmt(*out.h_limit) : "") + "," +
                       (out.rho_left ? fmt(*out.rho_left) : "") + "," +
                       (out.rho_right ? fmt(*out.rho_right) : "") + "\n";
                std::cout << sweep_knob << "=" << fmt6(v) << " -> " << to_string(out.cls) << "\n";
                if (out.rho_right) {
                    xs.push_back(v);
                    rhos.push_back(*out.rho_right);
                }
            }
            write_file(std::filesystem::path(sweep_o.out) / "sweep.csv", csv);
            if (sweep_o.svg && xs.size() >= 2)
                write_file(std::filesystem::path(sweep_o.out) / "rho_sweep.svg",
                           emit_svg(xs, rhos, sweep_knob, "rho"));
        } else if (*thr) {
            auto [pc, nc] = load(thr_o);
            const auto knob = knob_from_string(thr_knob);
            if (!knob) throw std::invalid_argument("unknown knob '" + thr_knob + "'");
            const double v = find_threshold(pc, nc, *knob, thr_lo, thr_hi,
                                            class_from_string(thr_from),
                                            class_from_string(thr_to));
            std::cout << "threshold " << thr_knob << "=" << fmt(v) << "\n";
        } else if (*std_cmd) {
            const auto [pc, nc] = parse_config(std_config);
            if (!pc.kernel_right || pc.two_sided())
                throw std::invalid_argument("steady: needs a one-boundary nonlocal config");
            if (!(std_lo < std_hi) || std_points < 2)
                throw std::invalid_argument("steady: need lo < hi and points >= 2");
            const KernelParams kp = *pc.kernel_right;
            std::string csv = "h,F\n";
            std::vector<double> hs, Fs;
            for (int i = 0; i < std_points; ++i) {
                const double h =
                    std_lo + (std_hi - std_lo) * static_cast<double>(i) /
                                 static_cast<double>(std_points - 1);
                const double F = F_of_h(h, pc.D, pc.reaction.a, pc.mu, kp, std_dx);
                csv += fmt(h) + "," + fmt(F) + "\n";
                hs.push_back(h);
                Fs.push_back(F);
            }
            write_file(std::filesystem::path(std_out) / "steady_scan.csv", csv);
            if (std_svg)
                write_file(std::filesystem::path(std_out) / "steady_scan.svg",
                           emit_svg(hs, Fs, "h", "F(h)"));
            bool found = false;
            for (std::size_t i = 1; i < hs.size(); ++i) {
                if (Fs[i - 1] > 0.0 && Fs[i] < 0.0) {
                    const double root = find_balanced_h(pc.D, pc.reaction.a, pc.mu, kp,
                                                        hs[i - 1], hs[i], std_dx);
                    std::cout << "balanced h*=" << fmt(root) << "\n";
                    found = true;
                    break;
                }
            }
            if (!found) {
                std::cerr << "steady: no sign change of F on [" << fmt6(std_lo) << ", "
                          << fmt6(std_hi) << "]\n";
                return kExitCompute;
            }
        } else if (*spd) {
            std::cout << "k0=" << fmt(stefan_wave_speed_logistic(spd_r, spd_D, spd_mu, spd_a))
                      << "\n";
        } else if (*lim) {
            const auto ns = parse_int_list(lim_ns);
            const std::size_t cells = static_cast<std::size_t>(lim_cells);
            const double s = lim_h / static_cast<double>(cells);
            std::vector<double> vals(cells + 1);
            std::optional<double> fp;
            if (lim_fn == "linear") {
                for (std::size_t i = 0; i <= cells; ++i) vals[i] = s * static_cast<double>(i);
                fp = 1.0;
            } else if (lim_fn == "cos") {
                for (std::size_t i = 0; i <= cells; ++i)
                    vals[i] = std::cos(s * static_cast<double>(i));
                fp = -std::sin(lim_h);
            } else {
                throw std::invalid_argument("limit-check: --fn must be linear or cos");
            }
            const SampledFunction f(0.0, s, std::move(vals));
            const auto rows = convergence_study(f, lim_h, ns, fp);
            std::string csv = "n,value,target,abs_error\n";
            for (const auto& r : rows) {
                csv += std::to_string(r.n) + "," + fmt(r.value) + "," + fmt(r.target) + "," +
                       fmt(r.abs_error) + "\n";
                std::cout << "n=" << r.n << " value=" << fmt(r.value)
                          << " target=" << fmt(r.target) << " abs_error=" << fmt(r.abs_error)
                          << "\n";
            }
            write_file(std::filesystem::path(lim_out) / "limit_check.csv", csv);
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const NoPositiveSolution& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgs;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    }
    return 0;
}
