#include "fkpp/problem.hpp"

#include <cmath>
#include <stdexcept>

namespace fkpp {

InitialCondition InitialCondition::polynomial(double beta) {
    InitialCondition ic;
    ic.kind = Kind::Polynomial;
    ic.beta = beta;
    return ic;
}

InitialCondition InitialCondition::tabulated(SampledFunction table) {
    InitialCondition ic;
    ic.kind = Kind::Tabulated;
    ic.table = std::move(table);
    return ic;
}

namespace {

void validate_kernel(const KernelParams& kp, const char* name,
                     std::vector<std::string>& out) {
    if (!(kp.c1 > kp.c2)) out.push_back(std::string(name) + ": c1>c2 required");
    if (!(kp.c2 > 0.0)) out.push_back(std::string(name) + ": c2>0 required");
    if (!(kp.alpha1 > kp.alpha2)) out.push_back(std::string(name) + ": alpha1>alpha2 required");
    if (!(kp.alpha2 > 0.0)) out.push_back(std::string(name) + ": alpha2>0 required");
}

} // namespace

std::vector<std::string> validate(const ProblemConfig& c) {
    std::vector<std::string> v;
    if (!(c.D > 0.0)) v.push_back("D>0 required");
    if (!(c.mu > 0.0)) v.push_back("mu>0 required");
    if (!(c.reaction.r >= 0.0)) v.push_back("r>=0 required");
    if (!(c.reaction.a > 0.0)) v.push_back("a>0 required");
    if (!(c.h0 > 0.0)) v.push_back("h0>0 required");
    if (c.g0 && !(*c.g0 < c.h0)) v.push_back("g0<h0 required");

    if (c.boundary_rule == BoundaryRule::Stefan) {
        if (c.kernel_right || c.kernel_left)
            v.push_back("Stefan rule excludes kernels");
        if (c.two_sided()) v.push_back("Stefan rule is one-boundary only");
    } else {
        if (!c.kernel_right) {
            v.push_back(c.two_sided() ? "two-boundary mode requires right kernel (c3..alpha4)"
                                      : "nonlocal rule requires a kernel");
        } else {
            validate_kernel(*c.kernel_right, c.two_sided() ? "right kernel" : "kernel", v);
        }
        if (c.two_sided()) {
            if (!c.kernel_left)
                v.push_back("two-boundary mode requires left kernel (c1..alpha2)");
            else
                validate_kernel(*c.kernel_left, "left kernel", v);
        } else if (c.kernel_left) {
            v.push_back("left kernel given but g0 absent");
        }
    }

    if (c.initial.kind == InitialCondition::Kind::Polynomial) {
        if (!(c.initial.beta > 0.0)) v.push_back("beta>0 required");
        if (c.g0 && std::abs(*c.g0 + c.h0) > 1e-12)
            v.push_back("polynomial initial data requires the centered range g0=-h0");
    } else {
        const auto& tab = c.initial.table;
        if (tab.size() < 2) {
            v.push_back("tabulated initial data missing");
        } else {
            if (std::abs(tab.values.back()) > 1e-12)
                v.push_back("u0 must vanish at the boundary node");
            if (c.g0 && std::abs(tab.values.front()) > 1e-12)
                v.push_back("u0 must vanish at the left boundary node");
            bool interior_positive = true;
            for (std::size_t i = c.g0 ? 1 : 0; i + 1 < tab.size(); ++i)
                if (!(tab.values[i] > 0.0)) interior_positive = false;
            if (!interior_positive) v.push_back("u0 must be positive in the open range");
        }
    }
    return v;
}

double initial_sup(const ProblemConfig& config) {
    if (config.initial.kind == InitialCondition::Kind::Polynomial)
        return config.initial.beta * config.h0 * config.h0;
    return config.initial.table.max_value();
}

State build_initial_state(const ProblemConfig& config, double dx) {
    if (!(dx > 0.0)) throw std::invalid_argument("build_initial_state: dx>0 required");
    const double g = config.g0.value_or(0.0);
    const double len = config.h0 - g;
    if (len / dx < 8.0 - 1e-12)
        throw std::invalid_argument("build_initial_state: grid too coarse, need h0/dx >= 8");

    const auto cells = static_cast<std::size_t>(std::llround(len / dx));
    const double s = len / static_cast<double>(cells);
    std::vector<double> vals(cells + 1);

    if (config.initial.kind == InitialCondition::Kind::Polynomial) {
        const double beta = config.initial.beta;
        for (std::size_t i = 0; i <= cells; ++i) {
            const double x = g + s * static_cast<double>(i);
            vals[i] = beta * (config.h0 * config.h0 - x * x);
        }
    } else {
        const auto& tab = config.initial.table;
        if (std::abs(tab(config.h0)) > 1e-12)
            throw std::invalid_argument("build_initial_state: u0 must vanish at the boundary");
        if (config.g0 && std::abs(tab(g)) > 1e-12)
            throw std::invalid_argument("build_initial_state: u0 must vanish at the left boundary");
        for (std::size_t i = 0; i <= cells; ++i)
            vals[i] = tab(g + s * static_cast<double>(i));
    }
    vals.back() = 0.0;
    if (config.g0) vals.front() = 0.0;

    State st;
    st.t = 0.0;
    st.g = g;
    st.h = config.h0;
    st.dx = dx;
    st.u = SampledFunction(g, s, std::move(vals));
    return st;
}

RuntimeBounds a_priori_bounds(const ProblemConfig& config) {
    if (config.boundary_rule != BoundaryRule::Nonlocal)
        throw std::invalid_argument("a_priori_bounds: Nonlocal rule only");
    if (!config.kernel_right)
        throw std::invalid_argument("a_priori_bounds: kernel required");
    RuntimeBounds b;
    const double sup0 = initial_sup(config);
    // Without growth the logistic upper solution degenerates to sup u0.
    b.M = config.reaction.r > 0.0 ? std::max(config.reaction.a, sup0) : sup0;
    const auto& kr = *config.kernel_right;
    b.K_right = config.mu * b.M * (kr.c1 / kr.alpha1 + kr.c2 / kr.alpha2);
    if (config.kernel_left) {
        const auto& kl = *config.kernel_left;
        b.K_left = config.mu * b.M * (kl.c1 / kl.alpha1 + kl.c2 / kl.alpha2);
    }
    return b;
}

} // namespace fkpp
