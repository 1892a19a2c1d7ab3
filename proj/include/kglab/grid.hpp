#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>

#include "kglab/errors.hpp"

namespace kg {

using cplx = std::complex<double>;
inline constexpr double pi = std::numbers::pi;

// Mixed-domain grid: a periodic square box of side box_period standing in for
// the plane, crossed with the unit circle carrying modes n in [-mode_cutoff,
// mode_cutoff]. The circle direction keeps exactly 2K+1 points, so the mode
// truncation is exact rather than an approximation.
struct GridSpec {
    double box_period = 64.0 * pi;
    int plane_points = 64;
    int mode_cutoff = 4;
    double dealias_fraction = 2.0 / 3.0;

    int nx() const { return plane_points; }
    int ny() const { return 2 * mode_cutoff + 1; }
    std::size_t size() const {
        return static_cast<std::size_t>(plane_points) * plane_points * ny();
    }
    double dx() const { return box_period / plane_points; }
    double dy() const { return 2.0 * pi / ny(); }
    double cell_volume() const { return dx() * dx() * dy(); }
    double volume() const { return box_period * box_period * 2.0 * pi; }

    // Spacing of the plane frequency lattice.
    double xi_unit() const { return 2.0 * pi / box_period; }
    // Largest resolved plane frequency magnitude along one axis.
    double xi_max() const { return xi_unit() * (plane_points / 2); }

    // Storage index <-> signed integer frequency. Layout is (i, j, q) row
    // major with q the circle direction.
    int signed_plane(int i) const { return i <= plane_points / 2 ? i : i - plane_points; }
    int signed_mode(int q) const { return q <= mode_cutoff ? q : q - ny(); }
    int plane_index(int s) const { return s >= 0 ? s : s + plane_points; }
    int mode_index(int n) const { return n >= 0 ? n : n + ny(); }
    std::size_t at(int i, int j, int q) const {
        return (static_cast<std::size_t>(i) * plane_points + j) * ny() + q;
    }

    // Physical coordinates, min-image representative in [-L/2, L/2).
    double coord(int i) const {
        double x = i * dx();
        return x - box_period * std::round(x / box_period);
    }

    void validate() const {
        if (plane_points < 4 || plane_points % 2 != 0)
            throw ContractViolation("grid: plane_points must be even and at least 4");
        if (mode_cutoff < 1)
            throw ContractViolation("grid: mode_cutoff must be at least 1");
        if (!(box_period > 0.0) || !std::isfinite(box_period))
            throw ContractViolation("grid: box_period must be positive");
        if (!(dealias_fraction > 0.0) || dealias_fraction > 1.0)
            throw ContractViolation("grid: dealias_fraction must lie in (0,1]");
    }

    bool operator==(const GridSpec&) const = default;
};

inline double lambda_symbol(double xi1, double xi2, double n) {
    return std::sqrt(1.0 + xi1 * xi1 + xi2 * xi2 + n * n);
}

} // namespace kg
