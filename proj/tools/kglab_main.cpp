#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kglab/config.hpp"
#include "kglab/oscillatory.hpp"
#include "kglab/reports.hpp"
#include "kglab/simulate.hpp"

namespace {

// Shared --config/--set handling for the run-driven subcommands.
struct ConfigArgs {
    std::string config_path;
    std::vector<std::string> overrides;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_path, "flat key = value config file");
        cmd->add_option("--set", overrides, "override, key=value (repeatable)")
            ->take_all();
    }

    kg::RunConfig resolve() const {
        kg::RunConfig cfg =
            config_path.empty() ? kg::RunConfig{} : kg::parse_config_file(config_path);
        for (const std::string& expr : overrides) kg::apply_setting_expr(cfg, expr);
        return cfg;
    }
};

int cmd_simulate(const ConfigArgs& args, bool quiet) {
    kg::RunConfig cfg = args.resolve();
    kg::SimulationSummary s = kg::run_simulation(cfg, true, quiet ? nullptr : &std::cout);
    std::cout << "simulate: " << s.steps << " steps, " << s.rows.size() << " samples -> "
              << s.csv_path << "\n";
    if (s.dispersive_fit_ok)
        std::cout << "  dispersive exponent " << kg::fmt_double(s.dispersive_fit.exponent)
                  << " (residual " << kg::fmt_double(s.dispersive_fit.residual) << ")\n";
    if (s.energy_fit_ok)
        std::cout << "  energy exponent " << kg::fmt_double(s.energy_fit.exponent)
                  << " (residual " << kg::fmt_double(s.energy_fit.residual) << ")\n";
    std::cout << "  theta final/max " << kg::fmt_double(s.theta_final) << " / "
              << kg::fmt_double(s.theta_max) << ", profile drift "
              << kg::fmt_double(s.profile_drift) << ", energy drift "
              << kg::fmt_double(s.energy_drift) << "\n";
    return 0;
}

int cmd_kernel_verify(int n_max, int k_max, std::vector<double> times, double tol,
                      double budget, const std::string& out_path, bool corrupt,
                      bool tol_study) {
    if (times.empty()) times = {1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0};
    std::vector<int> n_values, k_values;
    for (int n = 0; n <= n_max; ++n) n_values.push_back(n);
    for (int k = 0; k <= k_max; ++k) k_values.push_back(k);

    auto sweep = [&](double sweep_tol) {
        std::vector<kg::BoundRow> rows = kg::certify_ring_kernel(n_values, times, sweep_tol);
        std::vector<kg::BoundRow> shell =
            kg::certify_shell_kernel(k_values, n_values, times, sweep_tol);
        rows.insert(rows.end(), shell.begin(), shell.end());
        return rows;
    };

    std::vector<kg::BoundRow> rows = sweep(tol);
    if (corrupt) {
        std::cout << "kernel-verify: test mode, scaling certified bounds by 1e-6\n";
        for (auto& r : rows) {
            r.bound *= 1e-6;
            r.ratio = r.sup_abs / r.bound;
        }
    }
    double max_ratio = 0.0;
    for (const auto& r : rows) max_ratio = std::max(max_ratio, r.ratio);

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw kg::ContractViolation("kernel-verify: cannot write " + out_path);
        kg::write_bound_csv(out, rows);
    }
    std::cout << "kernel-verify: " << rows.size() << " rows, max sup/bound ratio "
              << kg::fmt_double(max_ratio) << " (budget " << kg::fmt_double(budget) << ")\n";
    if (!(max_ratio <= budget))
        throw kg::CertificationFailure("kernel-verify: max ratio " + kg::fmt_double(max_ratio) +
                                       " exceeds budget " + kg::fmt_double(budget));

    if (tol_study) {
        std::vector<kg::BoundRow> coarse = sweep(tol * 10.0);
        double coarse_max = 0.0;
        for (const auto& r : coarse) coarse_max = std::max(coarse_max, r.ratio);
        double rel = std::abs(coarse_max - max_ratio) /
                     std::max({std::abs(coarse_max), std::abs(max_ratio), 1e-300});
        std::cout << "kernel-verify: tol study " << kg::fmt_double(tol * 10.0) << " vs "
                  << kg::fmt_double(tol) << ": max ratios " << kg::fmt_double(coarse_max)
                  << " / " << kg::fmt_double(max_ratio) << " (rel diff " << kg::fmt_double(rel)
                  << ")\n";
        if (rel > 5e-4)
            throw kg::NumericalFailure(
                "kernel-verify: quadrature tolerances disagree beyond 3 significant digits");
    }
    return 0;
}

int cmd_norm_report(const std::string& input, const std::string& json_path, double t) {
    kg::Field f = kg::read_field_file(input);
    kg::Field zero(f.grid);
    kg::NormReport row = kg::compute_norm_report(f, zero, f, kg::preset_coeffs("zero"), t,
                                                 {0, 1, 2}, {2});
    std::string json = kg::norm_report_json(row);
    if (json_path.empty()) {
        std::cout << json;
    } else {
        // Assemble fully before touching the file so failures leave nothing
        // half-written behind.
        std::ofstream out(json_path, std::ios::binary);
        if (!out)
            throw kg::ContractViolation("norm-report: cannot write " + json_path);
        out << json;
        if (!out)
            throw kg::NumericalFailure("norm-report: write failed for " + json_path);
        std::cout << "norm-report: wrote " << json_path << "\n";
    }
    return 0;
}

int cmd_decay_scan(const ConfigArgs& args, const std::vector<double>& eps,
                   const std::string& out_path, bool quiet) {
    kg::RunConfig base = args.resolve();
    kg::DecayScanResult res = kg::run_decay_scan(base, eps, quiet ? nullptr : &std::cout);
    std::ostringstream csv;
    csv << "kind,epsilon0,energy_exponent,dispersive_exponent,energy_residual\n";
    for (const auto& r : res.rows)
        csv << "scan," << kg::fmt_double(r.epsilon0) << ',' << kg::fmt_double(r.energy_exponent)
            << ',' << kg::fmt_double(r.dispersive_exponent) << ','
            << kg::fmt_double(r.energy_residual) << "\n";
    csv << "control," << kg::fmt_double(eps.front()) << ','
        << kg::fmt_double(res.control_exponent) << ",,\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw kg::ContractViolation("decay-scan: cannot write " + out_path);
        out << csv.str();
    } else {
        std::cout << csv.str();
    }
    std::cout << "decay-scan: " << res.rows.size() << " amplitudes, control exponent "
              << kg::fmt_double(res.control_exponent) << ", inversions "
              << res.trend_inversions << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral simulation and bound-certification laboratory for a "
                 "quasilinear Klein-Gordon model on R^2 x T"};
    app.require_subcommand(1);

    ConfigArgs sim_args;
    bool sim_quiet = false;
    CLI::App* sim = app.add_subcommand(
        "simulate", "step the configured data and emit norm history + decay fits");
    sim_args.attach(sim);
    sim->add_flag("--quiet", sim_quiet, "suppress per-sample progress lines");

    int kv_nmax = 4, kv_kmax = 4;
    std::vector<double> kv_times;
    double kv_tol = 1e-6, kv_budget = 60.0;
    std::string kv_out;
    bool kv_corrupt = false, kv_study = false;
    CLI::App* kv = app.add_subcommand(
        "kernel-verify", "sweep oscillatory-kernel sup norms against their certified bounds");
    kv->add_option("--n-max", kv_nmax, "largest circle mode (sweep 0..n-max)");
    kv->add_option("--k-max", kv_kmax, "largest dyadic shell (sweep 0..k-max)");
    kv->add_option("--t", kv_times, "times to probe (repeatable; default 1..100 ladder)")
        ->take_all();
    kv->add_option("--tol", kv_tol, "quadrature tolerance");
    kv->add_option("--budget", kv_budget, "maximum admissible sup/bound ratio");
    kv->add_option("--out", kv_out, "write the bound table CSV here");
    kv->add_flag("--test-corrupt-bound", kv_corrupt,
                 "negative control: corrupt the bounds and expect certification failure");
    kv->add_flag("--tol-study", kv_study,
                 "re-run at 10x coarser tolerance and require 3-digit agreement");

    std::string nr_input, nr_json;
    double nr_t = 0.0;
    CLI::App* nr = app.add_subcommand(
        "norm-report", "full norm report of a spectral field snapshot (as u with udot = 0)");
    nr->add_option("--input", nr_input, "field snapshot file")->required();
    nr->add_option("--json", nr_json, "write the report here instead of stdout");
    nr->add_option("--t", nr_t, "time label recorded in the report");

    ConfigArgs scan_args;
    std::vector<double> scan_eps;
    std::string scan_out;
    bool scan_quiet = false;
    CLI::App* scan = app.add_subcommand(
        "decay-scan", "repeat the run over decreasing amplitudes and check the growth trend");
    scan_args.attach(scan);
    scan->add_option("--eps", scan_eps, "amplitude ladder, strictly decreasing (repeatable)")
        ->required()
        ->take_all();
    scan->add_option("--out", scan_out, "write the scan table CSV here");
    scan->add_flag("--quiet", scan_quiet, "suppress per-run progress lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sim->parsed()) return cmd_simulate(sim_args, sim_quiet);
        if (kv->parsed())
            return cmd_kernel_verify(kv_nmax, kv_kmax, kv_times, kv_tol, kv_budget, kv_out,
                                     kv_corrupt, kv_study);
        if (nr->parsed()) return cmd_norm_report(nr_input, nr_json, nr_t);
        if (scan->parsed()) return cmd_decay_scan(scan_args, scan_eps, scan_out, scan_quiet);
    } catch (const kg::ContractViolation& e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return 2;
    } catch (const kg::CertificationFailure& e) {
        std::cerr << "certification failure: " << e.what() << "\n";
        return 4;
    } catch (const kg::NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
