#pragma once

#include <stdexcept>

#include "fkpp/kernels.hpp"
#include "fkpp/sampled.hpp"

namespace fkpp {

// Thrown when the elliptic problem -D u'' = u(a-u), u'(0)=0, u(h)=0 has no
// positive solution, i.e. h <= (pi/2) sqrt(D/a).
struct NoPositiveSolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Positive steady profile on (0, h) with its nodal defect.
struct EllipticSolution {
    double h = 0.0;
    SampledFunction samples;
    double u_at_0 = 0.0;
    double residual = 0.0; // max |D u'' + u(a-u)| over interior nodes
};

// Critical habitat length (pi/2) sqrt(D/a).
double critical_length(double D, double a);

// Shooting on u(0) with an RK4 integrator of step ~dx.
EllipticSolution solve_elliptic(double D, double a, double h, double dx);

// Balance functional F(h) = mu int_0^h u_h(x) w(h-x) dx.
double F_of_h(double h, double D, double a, double mu, const KernelParams& kp, double dx);

// Bisection for F = 0 on [lo, hi]; requires a sign change.
double find_balanced_h(double D, double a, double mu, const KernelParams& kp,
                       double lo, double hi, double dx);

// Asymptotic front speed k0 of the Stefan free boundary, the root of
// mu U_k'(0) = k for the wave profile of -D U'' + k U' = r U (1 - U).
double stefan_wave_speed(double r, double D, double mu);

// Same wave speed for the logistic u(a-u): rescaling v = u/a reduces it to
// the unit-capacity wave with r -> r a and mu -> mu a.
double stefan_wave_speed_logistic(double r, double D, double mu, double a);

} // namespace fkpp
