#include "fkpp/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace fkpp {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double to_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return d;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' expects a number, got '" + value + "'");
    }
}

bool to_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError("config: key '" + key + "' expects a bool, got '" + value + "'");
}

SampledFunction read_profile_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open u0 file '" + path + "'");
    std::vector<double> xs, us;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#' || line == "x,u") continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ConfigError("config: malformed profile line '" + line + "' in " + path);
        xs.push_back(to_double("u0 x", trim(line.substr(0, comma))));
        us.push_back(to_double("u0 value", trim(line.substr(comma + 1))));
    }
    if (xs.size() < 2) throw ConfigError("config: u0 file '" + path + "' has fewer than 2 samples");
    const double dx = xs[1] - xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (std::abs(xs[i] - xs[0] - dx * static_cast<double>(i)) > 1e-9 * std::max(1.0, std::abs(xs[i])))
            throw ConfigError("config: u0 file '" + path + "' is not uniformly sampled");
    return SampledFunction(xs[0], dx, std::move(us));
}

} // namespace

std::pair<ProblemConfig, NumericsConfig> parse_config_text(const std::string& text) {
    static const std::map<std::string, int> known = {
        {"D", 0}, {"mu", 0}, {"r", 0}, {"a", 0},
        {"c1", 0}, {"c2", 0}, {"alpha1", 0}, {"alpha2", 0},
        {"c3", 0}, {"c4", 0}, {"alpha3", 0}, {"alpha4", 0},
        {"h0", 0}, {"two_sided", 0}, {"rule", 0}, {"u0", 0},
        {"dx", 0}, {"dt", 0}, {"t_end", 0}, {"sample_every", 0}};

    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(lineno) + " is not 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!known.count(key)) throw ConfigError("config: unknown key '" + key + "'");
        if (kv.count(key)) throw ConfigError("config: duplicate key '" + key + "'");
        kv[key] = value;
    }

    auto take = [&](const char* key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    auto require_num = [&](const char* key) {
        auto v = take(key);
        if (!v) throw ConfigError(std::string("config: missing required key '") + key + "'");
        return to_double(key, *v);
    };
    auto num_or = [&](const char* key, double dflt) {
        auto v = take(key);
        return v ? to_double(key, *v) : dflt;
    };

    ProblemConfig pc;
    pc.D = require_num("D");
    pc.mu = require_num("mu");
    pc.reaction.r = require_num("r");
    pc.reaction.a = require_num("a");
    pc.h0 = require_num("h0");

    const bool two = [&] {
        auto v = take("two_sided");
        return v ? to_bool("two_sided", *v) : false;
    }();
    if (two) pc.g0 = -pc.h0;

    const std::string rule = take("rule").value_or("nonlocal");
    if (rule == "stefan") {
        pc.boundary_rule = BoundaryRule::Stefan;
        for (const char* k : {"c1", "c2", "alpha1", "alpha2", "c3", "c4", "alpha3", "alpha4"})
            if (kv.count(k)) throw ConfigError(std::string("config: '") + k + "' not allowed with rule=stefan");
    } else if (rule == "nonlocal") {
        pc.boundary_rule = BoundaryRule::Nonlocal;
        KernelParams first{require_num("c1"), require_num("c2"),
                           require_num("alpha1"), require_num("alpha2")};
        if (two) {
            pc.kernel_left = first;
            pc.kernel_right = KernelParams{require_num("c3"), require_num("c4"),
                                           require_num("alpha3"), require_num("alpha4")};
        } else {
            pc.kernel_right = first;
            for (const char* k : {"c3", "c4", "alpha3", "alpha4"})
                if (kv.count(k))
                    throw ConfigError(std::string("config: '") + k + "' requires two_sided=true");
        }
    } else {
        throw ConfigError("config: rule must be 'nonlocal' or 'stefan', got '" + rule + "'");
    }

    const std::string u0 = [&] {
        auto v = take("u0");
        if (!v) throw ConfigError("config: missing required key 'u0'");
        return *v;
    }();
    if (u0.rfind("poly:", 0) == 0) {
        pc.initial = InitialCondition::polynomial(to_double("u0", u0.substr(5)));
    } else if (u0.rfind("file:", 0) == 0) {
        pc.initial = InitialCondition::tabulated(read_profile_csv(u0.substr(5)));
    } else {
        throw ConfigError("config: u0 must be 'poly:<beta>' or 'file:<path>'");
    }

    NumericsConfig nc;
    nc.dx = num_or("dx", 0.01);
    nc.dt = num_or("dt", 1e-3);
    nc.t_end = num_or("t_end", 200.0);
    nc.sample_every = static_cast<int>(num_or("sample_every", 100.0));

    auto violations = validate(pc);
    if (!violations.empty()) {
        std::string msg = "config: invalid configuration:";
        for (const auto& v : violations) msg += " [" + v + "]";
        throw ConfigError(msg);
    }
    return {pc, nc};
}

std::pair<ProblemConfig, NumericsConfig> parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::string dump_config(const ProblemConfig& pc, const NumericsConfig& nc) {
    if (pc.initial.kind != InitialCondition::Kind::Polynomial)
        throw ConfigError("dump_config: only polynomial initial conditions can be dumped");
    char buf[64];
    std::ostringstream out;
    auto emit = [&](const char* key, double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out << key << " = " << buf << "\n";
    };
    emit("D", pc.D);
    emit("mu", pc.mu);
    emit("r", pc.reaction.r);
    emit("a", pc.reaction.a);
    emit("h0", pc.h0);
    out << "two_sided = " << (pc.two_sided() ? "true" : "false") << "\n";
    out << "rule = " << (pc.boundary_rule == BoundaryRule::Stefan ? "stefan" : "nonlocal") << "\n";
    if (pc.boundary_rule == BoundaryRule::Nonlocal) {
        const KernelParams& first = pc.two_sided() ? *pc.kernel_left : *pc.kernel_right;
        emit("c1", first.c1);
        emit("c2", first.c2);
        emit("alpha1", first.alpha1);
        emit("alpha2", first.alpha2);
        if (pc.two_sided()) {
            emit("c3", pc.kernel_right->c1);
            emit("c4", pc.kernel_right->c2);
            emit("alpha3", pc.kernel_right->alpha1);
            emit("alpha4", pc.kernel_right->alpha2);
        }
    }
    std::snprintf(buf, sizeof buf, "%.17g", pc.initial.beta);
    out << "u0 = poly:" << buf << "\n";
    emit("dx", nc.dx);
    emit("dt", nc.dt);
    emit("t_end", nc.t_end);
    out << "sample_every = " << nc.sample_every << "\n";
    return out.str();
}

} // namespace fkpp
