#pragma once

#include <memory>
#include <vector>

namespace nslab {

/// Horizontally periodic, wall-bounded slab grid.
///
/// Nodes are (x1_i, x2_j, x3_k) with x1_i = i*lx/nx, x2_j = j*ly/ny (periodic,
/// right endpoint excluded) and x3_k = k*dz uniform in [0, height] with both
/// walls included. phi holds the conormal weight phi(x3_k).
struct Grid {
    int nx = 0, ny = 0, nz = 0;
    double lx = 0, ly = 0, height = 0;
    double dz = 0;
    std::vector<double> x3;
    std::vector<double> phi;

    std::size_t num_nodes() const { return std::size_t(nx) * ny * nz; }
    std::size_t idx(int i, int j, int k) const {
        return std::size_t(i) + std::size_t(nx) * (std::size_t(j) + std::size_t(ny) * k);
    }
    /// Horizontal cell area used by nodal quadrature.
    double hcell() const { return (lx / nx) * (ly / ny); }
    /// Trapezoid weight of vertical node k.
    double zweight(int k) const { return (k == 0 || k == nz - 1) ? 0.5 * dz : dz; }

    /// Conormal weight, vanishing linearly at the wall and bounded by 1.
    static double phi_of(double z) { return z / (1.0 + z); }
    static double phi_prime_of(double z) { return 1.0 / ((1.0 + z) * (1.0 + z)); }
};

using GridPtr = std::shared_ptr<const Grid>;

bool is_power_of_two(int n);

/// Build a slab grid; throws std::invalid_argument on bad sizes.
GridPtr build_grid(int nx, int ny, int nz, double lx, double ly, double height);

}  // namespace nslab
