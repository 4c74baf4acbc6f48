#include "fkpp/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "fkpp/steady.hpp"

namespace fkpp {

std::string to_string(OutcomeClass c) {
    switch (c) {
        case OutcomeClass::Vanishing: return "vanishing";
        case OutcomeClass::Balancing: return "balancing";
        case OutcomeClass::Spreading: return "spreading";
        default: return "undetermined";
    }
}

SpeedFit fit_speed(const Trajectory& traj, Side side, double tail_fraction) {
    if (!(tail_fraction > 0.0) || tail_fraction > 0.5)
        throw std::invalid_argument("fit_speed: tail_fraction in (0, 0.5] required");
    const auto& rec = traj.records;
    const std::size_t n = rec.size();
    const auto tail = static_cast<std::size_t>(std::ceil(tail_fraction * static_cast<double>(n)));
    if (tail < 10) throw std::invalid_argument("fit_speed: need at least 10 samples in the tail");
    const std::size_t first = n - tail;

    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    for (std::size_t i = first; i < n; ++i) {
        const double t = rec[i].t;
        const double y = side == Side::Right ? rec[i].h : rec[i].g;
        st += t;
        sy += y;
        stt += t * t;
        sty += t * y;
    }
    const double m = static_cast<double>(tail);
    const double denom = m * stt - st * st;
    SpeedFit fit;
    fit.slope = (m * sty - st * sy) / denom;
    fit.intercept = (sy - fit.slope * st) / m;
    double ss = 0.0;
    for (std::size_t i = first; i < n; ++i) {
        const double y = side == Side::Right ? rec[i].h : rec[i].g;
        const double d = y - (fit.intercept + fit.slope * rec[i].t);
        ss += d * d;
    }
    fit.residual = std::sqrt(ss / m);
    return fit;
}

Outcome classify(const Trajectory& traj, const ProblemConfig& config,
                 const NumericsConfig& num) {
    (void)num;
    const auto& last = traj.records.back();
    const double a = config.reaction.a;
    const bool two = config.two_sided();

    const SpeedFit right = fit_speed(traj, Side::Right, 0.25);
    SpeedFit left;
    if (two) left = fit_speed(traj, Side::Left, 0.25);

    const double slope_r = right.slope;
    const double slope_l = two ? left.slope : 0.0;
    const bool bounded = std::abs(slope_r) < 1e-3 && std::abs(slope_l) < 1e-3;

    Outcome out;
    const double width = last.h - last.g;
    if (width <= critical_length(config.D, a)) {
        // Sufficient vanishing criterion: the range cannot sustain growth.
        out.cls = OutcomeClass::Vanishing;
        out.h_limit = last.h;
        return out;
    }
    if (last.umax < 1e-3 * a && bounded) {
        out.cls = OutcomeClass::Vanishing;
        out.h_limit = last.h;
        return out;
    }
    const bool moving = slope_r >= 0.01 || (two && slope_l <= -0.01);
    if (moving && std::abs(last.umax - a) <= 0.05 * a) {
        out.cls = OutcomeClass::Spreading;
        out.rho_right = slope_r;
        if (two) out.rho_left = slope_l;
        return out;
    }
    if (bounded && last.umax >= 0.1 * a) {
        out.cls = OutcomeClass::Balancing;
        out.h_limit = last.h;
        return out;
    }
    out.cls = OutcomeClass::Undetermined;
    return out;
}

std::optional<Knob> knob_from_string(const std::string& name) {
    if (name == "c1") return Knob::c1;
    if (name == "c2") return Knob::c2;
    if (name == "alpha1") return Knob::alpha1;
    if (name == "alpha2") return Knob::alpha2;
    if (name == "h0") return Knob::h0;
    if (name == "beta") return Knob::beta;
    return std::nullopt;
}

std::string to_string(Knob k) {
    switch (k) {
        case Knob::c1: return "c1";
        case Knob::c2: return "c2";
        case Knob::alpha1: return "alpha1";
        case Knob::alpha2: return "alpha2";
        case Knob::h0: return "h0";
        default: return "beta";
    }
}

ProblemConfig with_knob(const ProblemConfig& base, Knob knob, double value) {
    ProblemConfig c = base;
    KernelParams* kp = c.two_sided() ? (c.kernel_left ? &*c.kernel_left : nullptr)
                                     : (c.kernel_right ? &*c.kernel_right : nullptr);
    switch (knob) {
        case Knob::c1:
        case Knob::c2:
        case Knob::alpha1:
        case Knob::alpha2:
            if (!kp) throw std::invalid_argument("with_knob: config has no kernel for this knob");
            break;
        default:
            break;
    }
    switch (knob) {
        case Knob::c1: kp->c1 = value; break;
        case Knob::c2: kp->c2 = value; break;
        case Knob::alpha1: kp->alpha1 = value; break;
        case Knob::alpha2: kp->alpha2 = value; break;
        case Knob::h0:
            c.h0 = value;
            if (c.g0) c.g0 = -value;
            break;
        case Knob::beta:
            if (c.initial.kind != InitialCondition::Kind::Polynomial)
                throw std::invalid_argument("with_knob: beta requires a polynomial initial condition");
            c.initial.beta = value;
            break;
    }
    return c;
}

double find_threshold(const ProblemConfig& base, const NumericsConfig& num, Knob knob,
                      double lo, double hi, OutcomeClass class_lo, OutcomeClass class_hi) {
    if (!(lo < hi)) throw std::invalid_argument("find_threshold: lo < hi required");
    auto probe = [&](double v) {
        const ProblemConfig cfg = with_knob(base, knob, v);
        return classify(simulate(cfg, num), cfg, num).cls;
    };
    const OutcomeClass at_lo = probe(lo);
    const OutcomeClass at_hi = probe(hi);
    if (at_lo != class_lo || at_hi != class_hi)
        throw std::invalid_argument("find_threshold: endpoints do not straddle the transition (lo=" +
                                    to_string(at_lo) + ", hi=" + to_string(at_hi) + ")");
    const double width = knob == Knob::h0 ? 0.002 : 0.01;
    while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        (probe(mid) == class_lo ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace fkpp
