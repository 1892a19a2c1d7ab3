#pragma once

#include <vector>

#include "kglab/field.hpp"

namespace kg {

// Forward/backward 3D transforms between physical samples and interpolant
// coefficients. Normalization: forward divides by the point count, so
// Parseval reads ||f||_{L2}^2 = volume * sum |coeff|^2 with unit constant.
// Plans are FFTW_ESTIMATE (deterministic) and cached behind a mutex; execution
// on distinct buffers is safe from multiple threads.
Field forward_transform(const GridSpec& grid, const std::vector<cplx>& samples);
std::vector<cplx> inverse_transform(const Field& f);

// Zero-padded inverse onto a grid refined by `factor` in every direction.
// Used for sup-norm evaluation of band-limited fields.
std::vector<cplx> inverse_transform_oversampled(const Field& f, int factor,
                                                GridSpec* fine_grid_out = nullptr);

// In-place transforms on raw buffers shaped like `grid` (physical <-> spectral).
void fft_forward_inplace(const GridSpec& grid, std::vector<cplx>& data);
void fft_backward_inplace(const GridSpec& grid, std::vector<cplx>& data);

// 2D plane-only helpers (size nx x nx, same normalization convention); used by
// per-mode sweeps where a full 3D field would not fit the budget.
void fft2_forward_inplace(int nx, std::vector<cplx>& data);
void fft2_backward_inplace(int nx, std::vector<cplx>& data);

} // namespace kg
