#pragma once

#include <complex>
#include <functional>

#include "nslab/field.hpp"

namespace nslab {

/// Horizontal (periodic) spectral operations, one 2-D transform per z-plane.
/// Plans are cached per (nx, ny) and shared; per-thread scratch buffers make
/// concurrent use from independent simulations safe.
namespace spectral {

/// Exact spectral derivative of the trigonometric interpolant, axis in {1,2}.
/// The Nyquist mode of the differentiated axis is zeroed, which keeps the
/// discrete pairing <f, d_i g> = -<d_i f, g> exact.
ScalarField deriv_h(const ScalarField& f, int axis);

/// -(k1^2 + k2^2) multiplier (horizontal Laplacian).
ScalarField laplacian_h(const ScalarField& f);

/// |k_h|^p multiplier with the zero horizontal mode annihilated.
ScalarField multiplier_abs_pow(const ScalarField& f, double p);

/// Per-plane horizontal mean removed; the removed part is returned via mean_part
/// when non-null (as a z-profile of means).
ScalarField remove_horizontal_mean(const ScalarField& f, std::vector<double>* mean_part = nullptr);

/// Warm the plan cache for a grid (call before spawning worker threads).
void warm_plans(const Grid& g);

}  // namespace spectral
}  // namespace nslab
