#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "fkpp/problem.hpp"
#include "fkpp/solver.hpp"

namespace fkpp {

// Flat key=value configuration files, '#' comments. Recognized keys:
//   D, mu, r, a, c1, c2, alpha1, alpha2, c3, c4, alpha3, alpha4, h0,
//   two_sided (bool), rule (nonlocal|stefan), u0 (poly:<beta> | file:<path>),
//   dx, dt, t_end, sample_every
// In two-boundary mode c1..alpha2 bind to the left kernel G and
// c3..alpha4 to the right kernel H; one-boundary mode uses c1..alpha2.
// Unknown keys are hard errors.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<ProblemConfig, NumericsConfig> parse_config(const std::string& path);
std::pair<ProblemConfig, NumericsConfig> parse_config_text(const std::string& text);

// Emits a config file that parses back to the same configuration.
std::string dump_config(const ProblemConfig& config, const NumericsConfig& num);

} // namespace fkpp
