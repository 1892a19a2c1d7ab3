#include "kglab/transform.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace kg {

namespace {

// Plan cache. FFTW planning is not thread safe; executing a cached plan on
// fresh buffers via fftw_execute_dft is. Plans are created FFTW_UNALIGNED so
// they accept whatever std::vector hands us.
class PlanCache {
  public:
    fftw_plan get(int rank, int n0, int n1, int n2, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto key = std::make_tuple(rank, n0, n1, n2, sign);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        // Dummy buffer only for planning; FFTW_ESTIMATE does not touch it.
        std::size_t total = static_cast<std::size_t>(n0) * (rank > 1 ? n1 : 1) *
                            (rank > 2 ? n2 : 1);
        std::vector<cplx> dummy(total);
        auto* ptr = reinterpret_cast<fftw_complex*>(dummy.data());
        fftw_plan p = nullptr;
        if (rank == 2)
            p = fftw_plan_dft_2d(n0, n1, ptr, ptr, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        else
            p = fftw_plan_dft_3d(n0, n1, n2, ptr, ptr, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!p) throw NumericalFailure("fftw refused to plan transform");
        cache_.emplace(key, p);
        return p;
    }

  private:
    std::mutex mutex_;
    std::map<std::tuple<int, int, int, int, int>, fftw_plan> cache_;
};

PlanCache& plans() {
    static PlanCache cache;
    return cache;
}

void execute(fftw_plan p, std::vector<cplx>& data) {
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(p, ptr, ptr);
}

} // namespace

void fft_forward_inplace(const GridSpec& grid, std::vector<cplx>& data) {
    if (data.size() != grid.size())
        throw ContractViolation("fft_forward: buffer size does not match grid");
    execute(plans().get(3, grid.nx(), grid.nx(), grid.ny(), FFTW_FORWARD), data);
    double scale = 1.0 / static_cast<double>(grid.size());
    for (auto& c : data) c *= scale;
}

void fft_backward_inplace(const GridSpec& grid, std::vector<cplx>& data) {
    if (data.size() != grid.size())
        throw ContractViolation("fft_backward: buffer size does not match grid");
    execute(plans().get(3, grid.nx(), grid.nx(), grid.ny(), FFTW_BACKWARD), data);
}

void fft2_forward_inplace(int nx, std::vector<cplx>& data) {
    if (data.size() != static_cast<std::size_t>(nx) * nx)
        throw ContractViolation("fft2_forward: buffer size does not match grid");
    execute(plans().get(2, nx, nx, 1, FFTW_FORWARD), data);
    double scale = 1.0 / (static_cast<double>(nx) * nx);
    for (auto& c : data) c *= scale;
}

void fft2_backward_inplace(int nx, std::vector<cplx>& data) {
    if (data.size() != static_cast<std::size_t>(nx) * nx)
        throw ContractViolation("fft2_backward: buffer size does not match grid");
    execute(plans().get(2, nx, nx, 1, FFTW_BACKWARD), data);
}

Field forward_transform(const GridSpec& grid, const std::vector<cplx>& samples) {
    grid.validate();
    Field f(grid);
    f.coeffs = samples;
    fft_forward_inplace(grid, f.coeffs);
    return f;
}

std::vector<cplx> inverse_transform(const Field& f) {
    std::vector<cplx> out = f.coeffs;
    fft_backward_inplace(f.grid, out);
    return out;
}

std::vector<cplx> inverse_transform_oversampled(const Field& f, int factor,
                                                GridSpec* fine_grid_out) {
    if (factor < 1) throw ContractViolation("oversample factor must be >= 1");
    if (factor == 1) {
        if (fine_grid_out) *fine_grid_out = f.grid;
        return inverse_transform(f);
    }
    const GridSpec& g = f.grid;
    GridSpec fine = g;
    fine.plane_points = g.plane_points * factor;
    // Keep the circle direction odd so the mode <-> index maps stay exact.
    fine.mode_cutoff = g.mode_cutoff * factor + (factor - 1);
    if (fine_grid_out) *fine_grid_out = fine;

    std::vector<cplx> padded(fine.size(), cplx(0.0, 0.0));
    for (int i = 0; i < g.nx(); ++i) {
        int si = g.signed_plane(i);
        int fi = si >= 0 ? si : si + fine.nx();
        for (int j = 0; j < g.nx(); ++j) {
            int sj = g.signed_plane(j);
            int fj = sj >= 0 ? sj : sj + fine.nx();
            for (int q = 0; q < g.ny(); ++q) {
                int n = g.signed_mode(q);
                int fq = n >= 0 ? n : n + fine.ny();
                padded[fine.at(fi, fj, fq)] = f.coeffs[g.at(i, j, q)];
            }
        }
    }
    fft_backward_inplace(fine, padded);
    return padded;
}

} // namespace kg
