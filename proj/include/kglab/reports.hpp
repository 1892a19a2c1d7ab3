#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "kglab/decay_fit.hpp"
#include "kglab/field.hpp"
#include "kglab/nonlinearity.hpp"
#include "kglab/oscillatory.hpp"

namespace kg {

// One diagnostic sample of a run (or of a standalone field).  sobolev maps
// order s -> H^s of u; z_j maps the localization scale J -> the localized
// atom norm; theta is the running sup of (1+tau) * dispersive and is filled
// by the driver that owns the history.
struct NormReport {
    double t = 0.0;
    std::map<int, double> sobolev;
    double z_value = 0.0;
    int z_arg_k = -1, z_arg_l = -1;
    std::map<int, double> z_j;
    double energy = 0.0;
    double dispersive = 0.0;
    double theta = 0.0;
};

// Computes every field-level entry of a NormReport.  u/udot feed the
// dispersive sum and the corrected energy; zfield (the profile during a run,
// the field itself for standalone reports) feeds the atom norms.
NormReport compute_norm_report(const Field& u, const Field& udot, const Field& zfield,
                               const NonlinearityCoeffs& coeffs, double t,
                               const std::vector<int>& sobolev_orders,
                               const std::vector<int>& z_j_scales);

// Shortest exact decimal for a double; all emitters below use it so repeated
// runs with one seed produce byte-identical files.
std::string fmt_double(double v);

// CSV with one row per report.  Columns: t, dispersive, theta, energy,
// sobolev<s>..., z, z_arg_k, z_arg_l, z_j<J>...; the map-derived columns are
// taken from the first row and must match on every row.
void write_norm_csv(std::ostream& out, const std::vector<NormReport>& rows);

std::string norm_report_json(const NormReport& row);
std::string decay_fit_json_fragment(const DecayFit& fit);

// CSV for kernel bound tables.  Columns: k, n, t, sup_abs, bound, ratio
// (k is written as -1 for rows coming from the ring certification, which has
// no shell index).
void write_bound_csv(std::ostream& out, const std::vector<BoundRow>& rows);

// Plain-text spectral field snapshots.  Layout: a header line
//   box_period plane_points mode_cutoff
// followed by one line `i j q re im` per stored coefficient (storage
// indices); omitted coefficients are zero, later lines overwrite earlier
// ones.  `#` starts a comment.  Parse errors throw ContractViolation naming
// the byte offset of the offending token.
Field read_field_file(const std::string& path);
void write_field_file(const std::string& path, const Field& f);

} // namespace kg
