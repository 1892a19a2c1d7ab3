#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "kglab/config.hpp"
#include "kglab/reports.hpp"

namespace kg {

struct SimulationSummary {
    std::vector<NormReport> rows;
    DecayFit dispersive_fit;  // dispersive sum against (1+t), window [2, t_end]
    DecayFit energy_fit;      // corrected energy against (1+t), window [1, t_end]
    bool dispersive_fit_ok = false;
    bool energy_fit_ok = false;
    double theta_final = 0.0;
    double theta_max = 0.0;
    double profile_drift = 0.0;  // ||V(t_end) - V(0)||_2 relative to ||V(0)||_2
    double energy_drift = 0.0;   // max_t |E(t) - E(0)| / E(0)
    int steps = 0;
    std::string csv_path;
    std::string json_path;
};

// Runs the configured experiment: builds data at amplitude epsilon0, steps to
// t_end, samples a NormReport every diagnostics_every steps (plus first and
// last), fits the decay laws, and (when write_outputs) emits
// <output_dir>/<prefix>_norms.csv and <prefix>_summary.json.  Repeated runs
// of one config are byte-identical.  If the integrator detects blow-up the
// partial history and the last good state are written next to the regular
// outputs and the NumericalFailure is rethrown with the snapshot path
// appended.
SimulationSummary run_simulation(const RunConfig& cfg, bool write_outputs,
                                 std::ostream* log = nullptr);

struct DecayScanRow {
    double epsilon0 = 0.0;
    double energy_exponent = 0.0;
    double dispersive_exponent = 0.0;
    double energy_residual = 0.0;
};

struct DecayScanResult {
    std::vector<DecayScanRow> rows;       // one per requested amplitude
    double control_exponent = 0.0;        // energy exponent of the zero-coefficient run
    int trend_inversions = 0;
};

// Repeats the run over a list of amplitudes (positive, strictly decreasing;
// anything else is a ContractViolation) plus one zero-coefficient control at
// the largest amplitude.  The fitted energy-growth exponents must decrease
// along the list with at most one inversion allowed for noise; otherwise a
// CertificationFailure is thrown.
DecayScanResult run_decay_scan(const RunConfig& base, const std::vector<double>& amplitudes,
                               std::ostream* log = nullptr);

} // namespace kg
