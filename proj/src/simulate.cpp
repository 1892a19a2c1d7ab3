#include "kglab/simulate.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kglab/data.hpp"
#include "kglab/dynamics.hpp"
#include "kglab/norms.hpp"
#include "kglab/spectral.hpp"

namespace kg {

namespace {

std::pair<Field, Field> build_data(const RunConfig& cfg) {
    if (cfg.data == "bump") {
        auto [u0, u1] = gaussian_bump_data(cfg.grid, cfg.bump_sigma);
        u0 *= cplx(cfg.epsilon0, 0.0);
        u1 *= cplx(cfg.epsilon0, 0.0);
        return {u0, u1};
    }
    Field u0 = random_band_field(cfg.grid, cfg.seed);
    Field u1 = random_band_field(cfg.grid, cfg.seed + 1);
    u0 *= cplx(cfg.epsilon0, 0.0);
    u1 *= cplx(cfg.epsilon0, 0.0);
    return {u0, u1};
}

DecayFit guarded_fit(const std::vector<std::pair<double, double>>& samples, double lo,
                     double hi, bool& ok) {
    int inside = 0;
    for (const auto& [t, v] : samples)
        if (t >= lo && t <= hi && v > 0.0) ++inside;
    if (inside < 8) {
        ok = false;
        return DecayFit{};
    }
    ok = true;
    return fit_decay(samples, lo, hi);
}

std::string sanitize_join(const std::string& dir, const std::string& name) {
    std::filesystem::path p(dir);
    return (p / name).string();
}

} // namespace

SimulationSummary run_simulation(const RunConfig& cfg, bool write_outputs, std::ostream* log) {
    cfg.validate();
    SimulationSummary out;
    if (write_outputs)
        std::filesystem::create_directories(cfg.output_dir);

    auto [u0, u1] = build_data(cfg);
    StateU state = normalize_initial_data(u0, u1);
    Stepper stepper(cfg.grid, cfg.coeffs);

    const std::vector<int> sobolev_orders = {0, 1, 2};
    const std::vector<int> z_j_scales = {2};
    ThetaTracker tracker;

    Field v0 = stepper.profile(state);
    double v0_norm = l2_norm(v0);

    auto sample = [&](const StateU& s) {
        auto [u, udot] = unpack_state(s);
        NormReport row = compute_norm_report(u, udot, stepper.profile(s), cfg.coeffs, s.t,
                                             sobolev_orders, z_j_scales);
        tracker.observe_value(s.t, row.dispersive);
        row.theta = tracker.theta();
        out.rows.push_back(row);
        if (log)
            (*log) << "t=" << fmt_double(row.t) << " dispersive=" << fmt_double(row.dispersive)
                   << " energy=" << fmt_double(row.energy) << " z=" << fmt_double(row.z_value)
                   << "\n";
    };

    auto flush_outputs = [&](const std::string& csv_name) {
        std::string path = sanitize_join(cfg.output_dir, cfg.prefix + csv_name);
        std::ofstream csv(path, std::ios::binary);
        if (!csv)
            throw ContractViolation("simulate: cannot write " + path);
        write_norm_csv(csv, out.rows);
        return path;
    };

    sample(state);

    int n_steps = static_cast<int>(std::ceil(cfg.t_end / cfg.dt - 1e-9));
    for (int i = 1; i <= n_steps; ++i) {
        double target = std::min(cfg.t_end, i * cfg.dt);
        double h = target - state.t;
        if (h <= 0.0) continue;
        try {
            stepper.step(state, h);
        } catch (const NumericalFailure& e) {
            std::string note;
            if (write_outputs) {
                std::string csv = flush_outputs("_partial.csv");
                std::string snap = sanitize_join(cfg.output_dir, cfg.prefix + "_last_good.field");
                write_field_file(snap, state.U);
                note = "; last good snapshot: " + snap + ", partial history: " + csv;
            }
            throw NumericalFailure(std::string(e.what()) + " at t=" + fmt_double(state.t) + note);
        }
        state.t = target; // pin accumulated rounding to the schedule
        bool last = (i == n_steps);
        if (i % cfg.diagnostics_every == 0 || last) sample(state);
        ++out.steps;
    }

    std::vector<std::pair<double, double>> disp_samples, energy_samples;
    for (const auto& row : out.rows) {
        disp_samples.emplace_back(row.t, row.dispersive);
        energy_samples.emplace_back(row.t, row.energy);
    }
    out.dispersive_fit = guarded_fit(disp_samples, 2.0, cfg.t_end, out.dispersive_fit_ok);
    out.energy_fit = guarded_fit(energy_samples, 1.0, cfg.t_end, out.energy_fit_ok);
    out.theta_final = out.rows.back().theta;
    for (const auto& row : out.rows) out.theta_max = std::max(out.theta_max, row.theta);

    Field vend = stepper.profile(state);
    vend -= v0;
    out.profile_drift = v0_norm > 0.0 ? l2_norm(vend) / v0_norm : 0.0;
    double e0 = out.rows.front().energy;
    if (e0 > 0.0)
        for (const auto& row : out.rows)
            out.energy_drift = std::max(out.energy_drift, std::abs(row.energy - e0) / e0);

    if (write_outputs) {
        out.csv_path = flush_outputs("_norms.csv");
        std::string jpath = sanitize_join(cfg.output_dir, cfg.prefix + "_summary.json");
        std::ofstream js(jpath, std::ios::binary);
        if (!js)
            throw ContractViolation("simulate: cannot write " + jpath);
        js << "{\n"
           << "  \"coeffs\": \"" << cfg.coeffs_name << "\",\n"
           << "  \"epsilon0\": " << fmt_double(cfg.epsilon0) << ",\n"
           << "  \"t_end\": " << fmt_double(cfg.t_end) << ",\n"
           << "  \"dt\": " << fmt_double(cfg.dt) << ",\n"
           << "  \"seed\": " << cfg.seed << ",\n"
           << "  \"steps\": " << out.steps << ",\n"
           << "  \"rows\": " << out.rows.size() << ",\n"
           << "  \"dispersive_fit\": "
           << (out.dispersive_fit_ok ? decay_fit_json_fragment(out.dispersive_fit) : "null")
           << ",\n"
           << "  \"energy_fit\": "
           << (out.energy_fit_ok ? decay_fit_json_fragment(out.energy_fit) : "null") << ",\n"
           << "  \"theta_final\": " << fmt_double(out.theta_final) << ",\n"
           << "  \"theta_max\": " << fmt_double(out.theta_max) << ",\n"
           << "  \"profile_drift\": " << fmt_double(out.profile_drift) << ",\n"
           << "  \"energy_drift\": " << fmt_double(out.energy_drift) << "\n"
           << "}\n";
        out.json_path = jpath;
    }
    return out;
}

DecayScanResult run_decay_scan(const RunConfig& base, const std::vector<double>& amplitudes,
                               std::ostream* log) {
    if (amplitudes.empty())
        throw ContractViolation("decay scan: amplitude list is empty");
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
        if (!(amplitudes[i] > 0.0))
            throw ContractViolation("decay scan: amplitudes must be positive");
        if (i > 0 && !(amplitudes[i] < amplitudes[i - 1]))
            throw ContractViolation("decay scan: amplitudes must be strictly decreasing");
    }

    DecayScanResult result;
    for (double eps : amplitudes) {
        RunConfig cfg = base;
        cfg.epsilon0 = eps;
        SimulationSummary s = run_simulation(cfg, false, nullptr);
        if (!s.energy_fit_ok)
            throw ContractViolation("decay scan: run too short to fit the energy envelope");
        DecayScanRow row;
        row.epsilon0 = eps;
        row.energy_exponent = s.energy_fit.exponent;
        row.dispersive_exponent = s.dispersive_fit_ok ? s.dispersive_fit.exponent : 0.0;
        row.energy_residual = s.energy_fit.residual;
        result.rows.push_back(row);
        if (log)
            (*log) << "epsilon0=" << fmt_double(eps)
                   << " energy_exponent=" << fmt_double(row.energy_exponent)
                   << " dispersive_exponent=" << fmt_double(row.dispersive_exponent) << "\n";
    }

    {
        RunConfig cfg = base;
        cfg.epsilon0 = amplitudes.front();
        cfg.coeffs = preset_coeffs("zero");
        cfg.coeffs_name = "zero";
        SimulationSummary s = run_simulation(cfg, false, nullptr);
        if (!s.energy_fit_ok)
            throw ContractViolation("decay scan: control run too short to fit");
        result.control_exponent = s.energy_fit.exponent;
        if (log)
            (*log) << "control energy_exponent=" << fmt_double(result.control_exponent) << "\n";
    }

    for (std::size_t i = 1; i < result.rows.size(); ++i)
        if (result.rows[i].energy_exponent > result.rows[i - 1].energy_exponent)
            ++result.trend_inversions;
    if (result.trend_inversions > 1)
        throw CertificationFailure(
            "decay scan: energy-growth exponents fail to decrease with amplitude (" +
            std::to_string(result.trend_inversions) + " inversions)");
    return result;
}

} // namespace kg
