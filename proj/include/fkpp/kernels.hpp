#pragma once

#include "fkpp/sampled.hpp"

namespace fkpp {

// Exponential-difference weight kernel w(z) = c1*exp(-alpha1*z) - c2*exp(-alpha2*z).
// Positive (expanding) near the boundary, negative (contracting) far from it.
struct KernelParams {
    double c1 = 0.0;
    double c2 = 0.0;
    double alpha1 = 0.0;
    double alpha2 = 0.0;
};

enum class Side { Left, Right };

// Throws std::invalid_argument when the parameters are outside
// c1 >= c2 > 0, alpha1 > alpha2 > 0. The amplitude comparison is weak
// so that degenerate kernels with c1 == c2 remain evaluable.
void check_kernel(const KernelParams& kp);

// w(z) for z >= 0; throws std::domain_error for z < 0.
double eval_kernel(const KernelParams& kp, double z);

// The unique sign change z* = ln(c1/c2) / (alpha1 - alpha2).
double kernel_root(const KernelParams& kp);

// Exact closed-form integral of w over [lo, hi]; hi may be +infinity.
double kernel_integral(const KernelParams& kp, double lo, double hi);

// Weighted-population boundary functional. For side == Right returns
//   mu * int_g^h u(x) w(h - x) dx,
// for side == Left returns
//   mu * int_h^g u(x) w(x - g) dx = -mu * int_g^h u(x) w(x - g) dx,
// where [g, h] is the support of u. The piecewise-linear u is integrated
// exactly against each exponential (closed-form moments per grid cell).
double boundary_functional(const SampledFunction& u, const KernelParams& kp,
                           Side side, double mu);

// Delta sequence S_n(x) = n (exp(-n x) - exp(-n^2 x)) for x >= 0, else 0.
double delta_seq_S(int n, double x);

// w_n(x) = n^3 exp(-n^2 x) - n^2 exp(-n x) for x >= 0, else 0;
// the derivative of S_n on x > 0.
double delta_seq_w(int n, double x);

// Kernel parameters realizing w_n: c1 = n^3, c2 = n^2, alpha1 = n^2, alpha2 = n.
// Requires n >= 2 (w_1 is identically zero and has no valid parameter set).
KernelParams delta_seq_params(int n);

} // namespace fkpp
