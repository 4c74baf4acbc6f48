#include "fkpp/kernels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fkpp {

namespace {

// exp(-x) with the exponent clamped so huge offsets underflow straight to
// zero instead of crawling through subnormals.
double expneg(double x) {
    if (x > 745.0) return 0.0;
    return std::exp(-x);
}

// Zeroth and first moments of exp(-alpha*t) over one cell [0, s]:
//   m0 = int_0^s exp(-alpha t) dt
//   m1 = int_0^s t exp(-alpha t) dt
// Series fallback keeps the closed forms from cancelling for alpha*s << 1.
struct CellMoments {
    double m0;
    double m1;
};

CellMoments exp_moments(double alpha, double s) {
    const double as = alpha * s;
    if (as < 1e-4) {
        const double m0 = s * (1.0 - as / 2.0 + as * as / 6.0 - as * as * as / 24.0);
        const double m1 = s * s * (0.5 - as / 3.0 + as * as / 8.0 - as * as * as / 30.0);
        return {m0, m1};
    }
    const double e = expneg(as);
    return {(1.0 - e) / alpha, (1.0 - (1.0 + as) * e) / (alpha * alpha)};
}

// int_0^L u(z) exp(-alpha z) dz for the piecewise-linear u described by the
// node sequence values[first], values[first+step], ... walked in increasing z.
// Each cell contributes exp(-alpha z_k) * (ua*m0 + (ub-ua)/s * m1); the
// exp(-alpha z_k) prefix is carried by a multiplicative recurrence, refreshed
// periodically to cap drift.
double exponential_weighted_integral(const std::vector<double>& values,
                                     std::size_t first, std::ptrdiff_t step,
                                     double s, double alpha) {
    const std::size_t cells = values.size() - 1;
    const auto [m0, m1] = exp_moments(alpha, s);
    const double m1_over_s = m1 / s;
    const double decay = expneg(alpha * s);

    double total = 0.0;
    double prefix = 1.0;
    std::ptrdiff_t idx = static_cast<std::ptrdiff_t>(first);
    for (std::size_t k = 0; k < cells; ++k) {
        if ((k & 511u) == 0u && k > 0u) prefix = expneg(alpha * s * static_cast<double>(k));
        if (prefix == 0.0) break;
        const double ua = values[static_cast<std::size_t>(idx)];
        const double ub = values[static_cast<std::size_t>(idx + step)];
        total += prefix * (ua * m0 + (ub - ua) * m1_over_s);
        prefix *= decay;
        idx += step;
    }
    return total;
}

} // namespace

void check_kernel(const KernelParams& kp) {
    if (!(kp.c2 > 0.0) || !(kp.c1 >= kp.c2))
        throw std::invalid_argument("KernelParams: require c1 >= c2 > 0");
    if (!(kp.alpha2 > 0.0) || !(kp.alpha1 > kp.alpha2))
        throw std::invalid_argument("KernelParams: require alpha1 > alpha2 > 0");
}

double eval_kernel(const KernelParams& kp, double z) {
    check_kernel(kp);
    if (z < 0.0) throw std::domain_error("eval_kernel: kernel defined for z >= 0 only");
    return kp.c1 * expneg(kp.alpha1 * z) - kp.c2 * expneg(kp.alpha2 * z);
}

double kernel_root(const KernelParams& kp) {
    check_kernel(kp);
    return std::log(kp.c1 / kp.c2) / (kp.alpha1 - kp.alpha2);
}

double kernel_integral(const KernelParams& kp, double lo, double hi) {
    check_kernel(kp);
    if (lo < 0.0 || lo > hi) throw std::invalid_argument("kernel_integral: require 0 <= lo <= hi");
    const double e1 = std::isinf(hi) ? 0.0 : expneg(kp.alpha1 * hi);
    const double e2 = std::isinf(hi) ? 0.0 : expneg(kp.alpha2 * hi);
    return kp.c1 / kp.alpha1 * (expneg(kp.alpha1 * lo) - e1) -
           kp.c2 / kp.alpha2 * (expneg(kp.alpha2 * lo) - e2);
}

double boundary_functional(const SampledFunction& u, const KernelParams& kp,
                           Side side, double mu) {
    check_kernel(kp);
    const std::size_t n = u.size();
    double t1, t2;
    if (side == Side::Right) {
        // z = h - x: walk nodes from the right end inward.
        t1 = exponential_weighted_integral(u.values, n - 1, -1, u.dx, kp.alpha1);
        t2 = exponential_weighted_integral(u.values, n - 1, -1, u.dx, kp.alpha2);
        return mu * (kp.c1 * t1 - kp.c2 * t2);
    }
    // z = x - g: walk nodes from the left end outward; the reversed
    // integration limits (h down to g) flip the sign.
    t1 = exponential_weighted_integral(u.values, 0, +1, u.dx, kp.alpha1);
    t2 = exponential_weighted_integral(u.values, 0, +1, u.dx, kp.alpha2);
    return -mu * (kp.c1 * t1 - kp.c2 * t2);
}

double delta_seq_S(int n, double x) {
    if (n < 1) throw std::invalid_argument("delta_seq_S: n >= 1 required");
    if (x < 0.0) return 0.0;
    const double dn = static_cast<double>(n);
    return dn * (expneg(dn * x) - expneg(dn * dn * x));
}

double delta_seq_w(int n, double x) {
    if (n < 1) throw std::invalid_argument("delta_seq_w: n >= 1 required");
    if (x < 0.0) return 0.0;
    const double dn = static_cast<double>(n);
    return dn * dn * dn * expneg(dn * dn * x) - dn * dn * expneg(dn * x);
}

KernelParams delta_seq_params(int n) {
    if (n < 2) throw std::invalid_argument("delta_seq_params: n >= 2 required");
    const double dn = static_cast<double>(n);
    return {dn * dn * dn, dn * dn, dn * dn, dn};
}

} // namespace fkpp
