#include "kglab/norms.hpp"

#include <cmath>

#include "kglab/projections.hpp"
#include "kglab/spectral.hpp"

namespace kg {

std::vector<std::array<int, 3>> multi_indices(int order) {
    if (order < 0) throw ContractViolation("multi_indices: order must be >= 0");
    std::vector<std::array<int, 3>> out;
    for (int total = 0; total <= order; ++total)
        for (int a = total; a >= 0; --a)
            for (int b = total - a; b >= 0; --b)
                out.push_back({a, b, total - a - b});
    return out;
}

double sobolev_norm(const Field& f, double s) {
    const GridSpec& g = f.grid;
    double acc = 0.0;
    const double du = g.xi_unit();
    for (int i = 0; i < g.nx(); ++i) {
        double x1 = du * g.signed_plane(i);
        for (int j = 0; j < g.nx(); ++j) {
            double x2 = du * g.signed_plane(j);
            double base = 1.0 + x1 * x1 + x2 * x2;
            std::size_t row = (static_cast<std::size_t>(i) * g.nx() + j) * g.ny();
            for (int q = 0; q < g.ny(); ++q) {
                double n = g.signed_mode(q);
                acc += std::pow(base + n * n, s) * std::norm(f.coeffs[row + q]);
            }
        }
    }
    return std::sqrt(g.volume() * acc);
}

double l1_norm(const Field& f, int oversample) {
    GridSpec fine;
    std::vector<cplx> phys = inverse_transform_oversampled(f, oversample, &fine);
    double s = 0.0;
    for (const auto& v : phys) s += std::abs(v);
    return s * fine.cell_volume();
}

std::vector<double> sup_norms_packed(const std::vector<const Field*>& fields,
                                     int oversample) {
    std::vector<double> out(fields.size(), 0.0);
    for (std::size_t i = 0; i < fields.size(); i += 2) {
        if (i + 1 < fields.size()) {
            fields[i]->require_same_grid(*fields[i + 1], "sup_norms_packed");
            Field packed = *fields[i];
            for (std::size_t c = 0; c < packed.coeffs.size(); ++c)
                packed.coeffs[c] += cplx(0.0, 1.0) * fields[i + 1]->coeffs[c];
            std::vector<cplx> phys = inverse_transform_oversampled(packed, oversample);
            double m0 = 0.0, m1 = 0.0;
            for (const auto& v : phys) {
                m0 = std::max(m0, std::abs(v.real()));
                m1 = std::max(m1, std::abs(v.imag()));
            }
            out[i] = m0;
            out[i + 1] = m1;
        } else {
            out[i] = sup_norm(*fields[i], oversample);
        }
    }
    return out;
}

namespace {

// Spatial weight table: for every plane point, the shells j >= 1 whose annulus
// contains its min-image radius (at most two), and the core bump value.
struct SpatialTable {
    int jmax;
    std::vector<double> core;                          // bump(|x|)
    std::vector<std::vector<std::pair<int, double>>> shells; // (j, phi_j(|x|))
};

SpatialTable build_spatial_table(const GridSpec& g, const CutoffFamily& cut) {
    SpatialTable t;
    t.jmax = max_space_shell(g);
    std::size_t npts = static_cast<std::size_t>(g.nx()) * g.nx();
    t.core.resize(npts);
    t.shells.resize(npts);
    for (int i = 0; i < g.nx(); ++i) {
        double x1 = g.coord(i);
        for (int j = 0; j < g.nx(); ++j) {
            double r = std::hypot(x1, g.coord(j));
            std::size_t p = static_cast<std::size_t>(i) * g.nx() + j;
            t.core[p] = cut.bump(r);
            for (int s = 1; s <= t.jmax; ++s) {
                if (r <= 1.25 * std::ldexp(1.0, s - 1)) break;
                if (r >= 1.6 * std::ldexp(1.0, s)) continue;
                double w = cut.shell(s, r);
                if (w != 0.0) t.shells[p].emplace_back(s, w);
            }
        }
    }
    return t;
}

ZNormResult z_norm_impl(const Field& f, const CutoffFamily& cut,
                        bool localized, int J) {
    const GridSpec& g = f.grid;
    SpatialTable table = build_spatial_table(g, cut);
    ZNormResult result;
    int kb = max_plane_shell(g), lb = max_mode_shell(g);
    std::vector<double> ssum(table.jmax + 1);
    for (int k = -1; k <= kb; ++k) {
        for (int l = -1; l <= lb; ++l) {
            Field piece = project_frequency(f, k, l, cut);
            double l2sq = 0.0;
            for (const auto& c : piece.coeffs) l2sq += std::norm(c);
            if (l2sq == 0.0) continue;
            ShellEntry e;
            e.k = k;
            e.l = l;
            e.l2 = std::sqrt(g.volume() * l2sq);
            std::vector<cplx> phys = inverse_transform(piece);
            std::fill(ssum.begin(), ssum.end(), 0.0);
            std::size_t npts = static_cast<std::size_t>(g.nx()) * g.nx();
            for (std::size_t p = 0; p < npts; ++p) {
                if (table.shells[p].empty()) continue;
                double dens = 0.0;
                std::size_t base = p * g.ny();
                for (int q = 0; q < g.ny(); ++q) dens += std::norm(phys[base + q]);
                for (const auto& [s, w] : table.shells[p]) ssum[s] += w * w * dens;
            }
            e.weighted = e.l2;
            for (int s = 1; s <= table.jmax; ++s) {
                double term = std::sqrt(g.cell_volume() * ssum[s]);
                double w = localized ? std::ldexp(1.0, std::min(s, 2 * J - s))
                                     : std::ldexp(1.0, s);
                e.weighted += w * term;
            }
            e.value = std::ldexp(e.weighted, 9 * (k + l));
            result.table.push_back(e);
            if (e.value > result.value) {
                result.value = e.value;
                result.arg_k = k;
                result.arg_l = l;
            }
        }
    }
    return result;
}

} // namespace

ZNormResult z_norm(const Field& f, const CutoffFamily& cut) {
    return z_norm_impl(f, cut, false, 0);
}

ZNormResult z_j_norm(const Field& f, int J, const CutoffFamily& cut) {
    if (J < 1) throw ContractViolation("z_j_norm: J must be >= 1");
    return z_norm_impl(f, cut, true, J);
}

double dispersive_sum(const Field& u, const Field& udot) {
    u.require_same_grid(udot, "dispersive_sum");
    std::vector<Field> fields;
    for (const auto& rho : multi_indices(2)) {
        Field d = u;
        for (int a = 0; a < rho[0]; ++a) d = derivative(d, 1);
        for (int a = 0; a < rho[1]; ++a) d = derivative(d, 2);
        for (int a = 0; a < rho[2]; ++a) d = derivative(d, 3);
        fields.push_back(std::move(d));
    }
    for (const auto& rho : multi_indices(1)) {
        Field d = udot;
        for (int a = 0; a < rho[0]; ++a) d = derivative(d, 1);
        for (int a = 0; a < rho[1]; ++a) d = derivative(d, 2);
        for (int a = 0; a < rho[2]; ++a) d = derivative(d, 3);
        fields.push_back(std::move(d));
    }
    std::vector<const Field*> ptrs;
    for (const auto& f : fields) ptrs.push_back(&f);
    double total = 0.0;
    for (double v : sup_norms_packed(ptrs)) total += v;
    return total;
}

void ThetaTracker::observe(double t, const Field& u, const Field& udot) {
    observe_value(t, dispersive_sum(u, udot));
}

void ThetaTracker::observe_value(double t, double dsum) {
    if (!samples_.empty() && t < samples_.back().first)
        throw ContractViolation("theta: samples must arrive in time order");
    samples_.emplace_back(t, dsum);
}

double ThetaTracker::theta() const {
    double best = 0.0;
    for (const auto& [t, d] : samples_) best = std::max(best, (1.0 + t) * d);
    return best;
}

double ThetaTracker::theta_at(double t) const {
    double best = 0.0;
    for (const auto& [tau, d] : samples_)
        if (tau <= t + 1e-12) best = std::max(best, (1.0 + tau) * d);
    return best;
}

} // namespace kg
