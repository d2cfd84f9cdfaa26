#include "nslab/grid.hpp"

#include <stdexcept>
#include <string>

namespace nslab {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

GridPtr build_grid(int nx, int ny, int nz, double lx, double ly, double height) {
    if (!is_power_of_two(nx) || nx < 8) throw std::invalid_argument("nx not power of two (>= 8)");
    if (!is_power_of_two(ny) || ny < 8) throw std::invalid_argument("ny not power of two (>= 8)");
    if (nz < 8) throw std::invalid_argument("nz < 8");
    if (!(lx > 0) || !(ly > 0) || !(height > 0))
        throw std::invalid_argument("domain extents must be positive");

    auto g = std::make_shared<Grid>();
    g->nx = nx;
    g->ny = ny;
    g->nz = nz;
    g->lx = lx;
    g->ly = ly;
    g->height = height;
    g->dz = height / (nz - 1);
    g->x3.resize(nz);
    g->phi.resize(nz);
    for (int k = 0; k < nz; ++k) {
        g->x3[k] = g->dz * k;
        g->phi[k] = Grid::phi_of(g->x3[k]);
    }
    g->x3[nz - 1] = height;  // exact endpoint
    g->phi[nz - 1] = Grid::phi_of(height);
    return g;
}

}  // namespace nslab
