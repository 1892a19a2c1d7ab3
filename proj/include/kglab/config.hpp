#pragma once

#include <cstdint>
#include <string>

#include "kglab/grid.hpp"
#include "kglab/nonlinearity.hpp"

namespace kg {

// Flat key = value experiment description.  Grid keys: box_period,
// plane_points, mode_cutoff, dealias_fraction.  Coefficients: either
// `coeffs = <preset>` or explicit entries `g.jkl`, `h.jk`, `q.ab` (digit
// indices, e.g. g.110 = 0.5), which start from the zero arrays.  Data keys:
// data (bump|random), bump_sigma, epsilon0, seed.  Run keys: t_end, dt,
// diagnostics_every, output_dir, prefix.
struct RunConfig {
    GridSpec grid;
    std::string coeffs_name = "mixed";
    NonlinearityCoeffs coeffs = preset_coeffs("mixed");
    double epsilon0 = 1e-3;
    double t_end = 40.0;
    double dt = 0.5;
    int diagnostics_every = 4;
    std::string output_dir = ".";
    std::string prefix = "run";
    std::uint64_t seed = 1;
    std::string data = "bump";
    double bump_sigma = 1.2;

    // t_end inside the wrap horizon, dt within the step budget, positive
    // amplitude; throws ContractViolation with the offending key.
    void validate() const;
};

// Applies one key = value assignment; unknown keys or unparsable values
// throw ContractViolation naming the key.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

// Reads a flat config file: blank lines and #-comments ignored, every other
// line must be key = value.
RunConfig parse_config_file(const std::string& path);

// Parses "key=value" (as passed on a command line) into an assignment.
void apply_setting_expr(RunConfig& cfg, const std::string& expr);

} // namespace kg
