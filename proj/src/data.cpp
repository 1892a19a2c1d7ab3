#include "kglab/data.hpp"

#include <cmath>

#include "kglab/spectral.hpp"

namespace kg {

Field random_band_field(const GridSpec& grid, std::uint64_t seed,
                        double band_fraction, bool real_valued) {
    grid.validate();
    if (!(band_fraction > 0.0) || band_fraction > 1.0)
        throw ContractViolation("random_band_field: band_fraction must lie in (0,1]");
    Rng rng(seed);
    Field f(grid);
    int pmax = static_cast<int>(std::floor(0.5 * grid.nx() * band_fraction));
    pmax = std::min(pmax, grid.nx() / 2 - 1);
    int mmax = static_cast<int>(std::floor(grid.mode_cutoff * band_fraction));
    for (int si = -pmax; si <= pmax; ++si)
        for (int sj = -pmax; sj <= pmax; ++sj)
            for (int n = -mmax; n <= mmax; ++n)
                f.coeffs[grid.at(grid.plane_index(si), grid.plane_index(sj),
                                 grid.mode_index(n))] = rng.cgauss();
    if (real_valued) f = hermitian_part(f);
    double nrm = l2_norm(f);
    if (nrm == 0.0) throw NumericalFailure("random_band_field: degenerate draw");
    f *= cplx(1.0 / nrm, 0.0);
    return f;
}

std::pair<Field, Field> gaussian_bump_data(const GridSpec& grid, double sigma) {
    grid.validate();
    if (!(sigma > 0.0))
        throw ContractViolation("gaussian_bump_data: sigma must be positive");
    std::vector<cplx> s0(grid.size()), s1(grid.size());
    for (int i = 0; i < grid.nx(); ++i) {
        double x1 = grid.coord(i);
        for (int j = 0; j < grid.nx(); ++j) {
            double x2 = grid.coord(j);
            double r2 = x1 * x1 + x2 * x2;
            double env = std::exp(-r2 / (2.0 * sigma * sigma));
            double env1 = std::exp(-r2 / (2.0 * sigma * sigma * 1.21));
            for (int q = 0; q < grid.ny(); ++q) {
                double y = q * grid.dy();
                s0[grid.at(i, j, q)] = env * (1.0 + 0.7 * std::cos(y) + 0.3 * std::cos(2.0 * y));
                s1[grid.at(i, j, q)] = env1 * (0.5 + 0.5 * std::sin(y) - 0.25 * std::cos(2.0 * y));
            }
        }
    }
    Field u0 = forward_transform(grid, s0);
    Field u1 = forward_transform(grid, s1);
    dealias_inplace(u0);
    dealias_inplace(u1);
    u0 = hermitian_part(u0);
    u1 = hermitian_part(u1);
    return {std::move(u0), std::move(u1)};
}

} // namespace kg
