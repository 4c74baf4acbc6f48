#include "fkpp/steady.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace fkpp {

namespace {

// RK4 integration of u'' = -u(a-u)/D from x=0 with u(0)=s, u'(0)=0;
// returns the nodal values (and u(h) through the last node).
std::vector<double> integrate_profile(double D, double a, double h, double s,
                                      std::size_t steps) {
    const double dx = h / static_cast<double>(steps);
    auto accel = [&](double u) { return -u * (a - u) / D; };
    std::vector<double> vals(steps + 1);
    double u = s, v = 0.0;
    vals[0] = u;
    for (std::size_t i = 0; i < steps; ++i) {
        const double k1u = v, k1v = accel(u);
        const double k2u = v + 0.5 * dx * k1v, k2v = accel(u + 0.5 * dx * k1u);
        const double k3u = v + 0.5 * dx * k2v, k3v = accel(u + 0.5 * dx * k2u);
        const double k4u = v + dx * k3v, k4v = accel(u + dx * k3u);
        u += dx / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        v += dx / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        vals[i + 1] = u;
    }
    return vals;
}

} // namespace

double critical_length(double D, double a) {
    if (!(D > 0.0) || !(a > 0.0))
        throw std::invalid_argument("critical_length: D, a must be positive");
    return 0.5 * std::numbers::pi * std::sqrt(D / a);
}

EllipticSolution solve_elliptic(double D, double a, double h, double dx) {
    const double h_crit = critical_length(D, a);
    if (!(h > h_crit))
        throw NoPositiveSolution("solve_elliptic: no positive solution for h <= (pi/2) sqrt(D/a)");
    if (!(dx > 0.0)) throw std::invalid_argument("solve_elliptic: dx must be positive");

    const auto steps = static_cast<std::size_t>(std::max<long long>(16, std::llround(h / dx)));
    const double tol = 1e-10 * a;

    // Shoot on the first zero crossing of u(.; s): its position increases with
    // s, from the critical length (s -> 0) to infinity (s -> a). Judging by
    // u(h) alone is wrong for larger h, where trajectories oscillate past
    // their first crossing and can return positive at x = h.
    auto shoot_miss = [&](const std::vector<double>& v) {
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i] < 0.0) return -a; // crossed strictly before h: s too small
        return v.back();               // signed miss at x = h
    };
    double lo = 1e-14 * a, hi = a * (1.0 - 1e-14);
    std::vector<double> vals;
    bool converged = false;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        vals = integrate_profile(D, a, h, mid, steps);
        const double end = shoot_miss(vals);
        if (end > -a && std::abs(end) <= tol) {
            converged = true;
            break;
        }
        (end > 0.0 ? hi : lo) = mid;
    }
    // Fall back to the upper bracket: those trajectories stay positive on
    // the whole interval even when bisection stalls at machine precision.
    if (!converged) vals = integrate_profile(D, a, h, hi, steps);
    // Defect with a fourth-order five-point stencil on interior nodes,
    // measured on the raw integrator output before the boundary node is
    // snapped to zero (the snap perturbs the last stencil otherwise).
    const double step = h / static_cast<double>(steps);
    const double s2 = step * step;
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < vals.size(); ++i) {
        const double upp = (-vals[i - 2] + 16.0 * vals[i - 1] - 30.0 * vals[i] +
                            16.0 * vals[i + 1] - vals[i + 2]) / (12.0 * s2);
        worst = std::max(worst, std::abs(D * upp + vals[i] * (a - vals[i])));
    }
    vals.back() = 0.0;

    EllipticSolution sol;
    sol.h = h;
    sol.u_at_0 = vals[0];
    sol.samples = SampledFunction(0.0, step, std::move(vals));
    sol.residual = worst;
    if (sol.residual > 1e-8 * a)
        throw std::runtime_error("solve_elliptic: residual " + std::to_string(sol.residual) +
                                 " exceeds 1e-8*a; refine dx");
    return sol;
}

double F_of_h(double h, double D, double a, double mu, const KernelParams& kp, double dx) {
    const EllipticSolution sol = solve_elliptic(D, a, h, dx);
    return boundary_functional(sol.samples, kp, Side::Right, mu);
}

double find_balanced_h(double D, double a, double mu, const KernelParams& kp,
                       double lo, double hi, double dx) {
    if (!(lo < hi)) throw std::invalid_argument("find_balanced_h: lo < hi required");
    double flo = F_of_h(lo, D, a, mu, kp, dx);
    double fhi = F_of_h(hi, D, a, mu, kp, dx);
    if (flo * fhi >= 0.0)
        throw std::invalid_argument("find_balanced_h: no sign change, F(lo)=" +
                                    std::to_string(flo) + " F(hi)=" + std::to_string(fhi));
    while (hi - lo > 1e-4) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = F_of_h(mid, D, a, mu, kp, dx);
        if (fmid == 0.0) return mid;
        if (flo * fmid < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

namespace {

// Shooting residual for the truncated wave BVP: integrates
// U'' = (k U' - r U (1 - U)) / D from U(0)=0, U'(0)=s and returns U(L)-1.
// Early exits classify clear over/undershoots.
double wave_shot(double r, double D, double k, double L, double s) {
    const auto steps = static_cast<std::size_t>(std::llround(L / 0.005));
    const double dx = L / static_cast<double>(steps);
    auto accel = [&](double u, double v) { return (k * v - r * u * (1.0 - u)) / D; };
    double u = 0.0, v = s;
    for (std::size_t i = 0; i < steps; ++i) {
        const double k1u = v, k1v = accel(u, v);
        const double k2u = v + 0.5 * dx * k1v, k2v = accel(u + 0.5 * dx * k1u, k2u);
        const double k3u = v + 0.5 * dx * k2v, k3v = accel(u + 0.5 * dx * k2u, k3u);
        const double k4u = v + dx * k3v, k4v = accel(u + dx * k3u, k4u);
        u += dx / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        v += dx / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        if (u > 1.5) return 1.0;               // ran past the plateau
        if (v < 0.0 && u < 1.0) return u - 1.0; // peaked below it
    }
    return u - 1.0;
}

// U'(0) of the wave profile reaching U(L)=1.
double wave_slope(double r, double D, double k, double L) {
    double lo = 1e-12, hi = 1.0;
    int grow = 0;
    while (wave_shot(r, D, k, L, hi) < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++grow > 60)
            throw std::runtime_error("stefan_wave_speed: failed to bracket the wave slope");
    }
    for (int iter = 0; iter < 100; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (wave_shot(r, D, k, L, mid) > 0.0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

double stefan_wave_speed(double r, double D, double mu) {
    if (!(r > 0.0) || !(D > 0.0) || !(mu > 0.0))
        throw std::invalid_argument("stefan_wave_speed: r, D, mu must be positive");
    const double L = 50.0 * std::sqrt(D / r);
    const double kmax = 2.0 * std::sqrt(r * D);
    auto phi = [&](double k) { return mu * wave_slope(r, D, k, L) - k; };

    double lo = 1e-9 * kmax, hi = kmax * (1.0 - 1e-9);
    if (!(phi(lo) > 0.0) || !(phi(hi) < 0.0))
        throw std::runtime_error("stefan_wave_speed: root of mu U'(0) - k not bracketed in (0, 2 sqrt(rD))");
    while (hi - lo > 1e-8 * kmax) {
        const double mid = 0.5 * (lo + hi);
        (phi(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double stefan_wave_speed_logistic(double r, double D, double mu, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("stefan_wave_speed_logistic: a must be positive");
    return stefan_wave_speed(r * a, D, mu * a);
}

} // namespace fkpp
