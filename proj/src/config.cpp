#include "kglab/config.hpp"

#include <cctype>
#include <fstream>
#include <string>

#include "kglab/dynamics.hpp"
#include "kglab/errors.hpp"

namespace kg {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size())
            throw ContractViolation("config: trailing characters in value for " + key);
        return v;
    } catch (const ContractViolation&) {
        throw;
    } catch (const std::exception&) {
        throw ContractViolation("config: expected a number for " + key + ", got '" + value + "'");
    }
}

long long parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(value, &pos);
        if (pos != value.size())
            throw ContractViolation("config: trailing characters in value for " + key);
        return v;
    } catch (const ContractViolation&) {
        throw;
    } catch (const std::exception&) {
        throw ContractViolation("config: expected an integer for " + key + ", got '" + value + "'");
    }
}

// Explicit coefficient entry: suffix is a run of digit indices, e.g. g.110.
bool coeff_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key.size() < 3 || key[1] != '.')
        return false;
    char kind = key[0];
    if (kind != 'g' && kind != 'h' && kind != 'q')
        return false;
    std::string idx = key.substr(2);
    std::size_t want = kind == 'g' ? 3 : 2;
    if (idx.size() != want)
        throw ContractViolation("config: " + key + " needs " + std::to_string(want) + " digit indices");
    int top = kind == 'q' ? 4 : 3;
    for (char c : idx)
        if (!std::isdigit(static_cast<unsigned char>(c)) || c - '0' > top)
            throw ContractViolation("config: coefficient index out of range in " + key);
    if (cfg.coeffs_name != "custom") {
        cfg.coeffs = preset_coeffs("zero");
        cfg.coeffs_name = "custom";
    }
    double v = parse_double(key, value);
    if (kind == 'g')
        cfg.coeffs.set_g(idx[0] - '0', idx[1] - '0', idx[2] - '0', v);
    else if (kind == 'h')
        cfg.coeffs.set_h(idx[0] - '0', idx[1] - '0', v);
    else
        cfg.coeffs.set_q(idx[0] - '0', idx[1] - '0', v);
    return true;
}

} // namespace

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "box_period") {
        cfg.grid.box_period = parse_double(key, value);
    } else if (key == "plane_points") {
        cfg.grid.plane_points = static_cast<int>(parse_int(key, value));
    } else if (key == "mode_cutoff") {
        cfg.grid.mode_cutoff = static_cast<int>(parse_int(key, value));
    } else if (key == "dealias_fraction") {
        cfg.grid.dealias_fraction = parse_double(key, value);
    } else if (key == "coeffs") {
        cfg.coeffs = preset_coeffs(value);
        cfg.coeffs_name = value;
    } else if (key == "epsilon0") {
        cfg.epsilon0 = parse_double(key, value);
    } else if (key == "t_end") {
        cfg.t_end = parse_double(key, value);
    } else if (key == "dt") {
        cfg.dt = parse_double(key, value);
    } else if (key == "diagnostics_every") {
        cfg.diagnostics_every = static_cast<int>(parse_int(key, value));
    } else if (key == "output_dir") {
        cfg.output_dir = value;
    } else if (key == "prefix") {
        cfg.prefix = value;
    } else if (key == "seed") {
        cfg.seed = static_cast<std::uint64_t>(parse_int(key, value));
    } else if (key == "data") {
        if (value != "bump" && value != "random")
            throw ContractViolation("config: data must be bump or random, got '" + value + "'");
        cfg.data = value;
    } else if (key == "bump_sigma") {
        cfg.bump_sigma = parse_double(key, value);
    } else if (!coeff_setting(cfg, key, value)) {
        throw ContractViolation("config: unknown key '" + key + "'");
    }
}

void apply_setting_expr(RunConfig& cfg, const std::string& expr) {
    std::size_t eq = expr.find('=');
    if (eq == std::string::npos)
        throw ContractViolation("config: override '" + expr + "' is not key=value");
    apply_setting(cfg, trim(expr.substr(0, eq)), trim(expr.substr(eq + 1)));
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ContractViolation("config: cannot open '" + path + "'");
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#')
            continue;
        std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw ContractViolation("config: " + path + ":" + std::to_string(lineno) +
                                    " is not key = value");
        apply_setting(cfg, trim(s.substr(0, eq)), trim(s.substr(eq + 1)));
    }
    return cfg;
}

void RunConfig::validate() const {
    grid.validate();
    if (epsilon0 <= 0.0)
        throw ContractViolation("config: epsilon0 must be positive");
    if (!(t_end > 0.0))
        throw ContractViolation("config: t_end must be positive");
    if (t_end >= 0.5 * grid.box_period)
        throw ContractViolation("config: t_end must stay below box_period / 2 (wrap horizon)");
    Stepper probe(grid, coeffs);
    if (!(dt > 0.0) || dt > probe.h_max())
        throw ContractViolation("config: dt must lie in (0, h_max]; h_max here is " +
                                std::to_string(probe.h_max()));
    if (diagnostics_every < 1)
        throw ContractViolation("config: diagnostics_every must be at least 1");
    if (bump_sigma <= 0.0)
        throw ContractViolation("config: bump_sigma must be positive");
}

} // namespace kg
