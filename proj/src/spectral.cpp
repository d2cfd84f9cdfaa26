#include "nslab/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace nslab::spectral {
namespace {

struct PlanSet {
    int nx, ny, nz;
    fftw_plan fwd = nullptr;  // batched r2c over all z planes
    fftw_plan bwd = nullptr;  // batched c2r
};

std::mutex plan_mutex;
std::map<std::tuple<int, int, int>, PlanSet> plan_cache;

// Plans are created once per grid size with FFTW_ESTIMATE so that the chosen
// algorithm (and hence rounding) is reproducible across runs.
const PlanSet& plans_for(int nx, int ny, int nz) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_tuple(nx, ny, nz);
    auto it = plan_cache.find(key);
    if (it != plan_cache.end()) return it->second;

    PlanSet ps;
    ps.nx = nx;
    ps.ny = ny;
    ps.nz = nz;
    int n[2] = {ny, nx};
    int ncplx = ny * (nx / 2 + 1);
    double* rbuf = fftw_alloc_real(std::size_t(nx) * ny * nz);
    fftw_complex* cbuf = fftw_alloc_complex(std::size_t(ncplx) * nz);
    ps.fwd = fftw_plan_many_dft_r2c(2, n, nz, rbuf, nullptr, 1, nx * ny, cbuf, nullptr, 1, ncplx,
                                    FFTW_ESTIMATE);
    ps.bwd = fftw_plan_many_dft_c2r(2, n, nz, cbuf, nullptr, 1, ncplx, rbuf, nullptr, 1, nx * ny,
                                    FFTW_ESTIMATE);
    fftw_free(rbuf);
    fftw_free(cbuf);
    if (!ps.fwd || !ps.bwd) throw std::runtime_error("fftw plan creation failed");
    return plan_cache.emplace(key, ps).first->second;
}

struct Scratch {
    std::size_t rn = 0, cn = 0;
    double* r = nullptr;
    fftw_complex* c = nullptr;
    void ensure(std::size_t rsize, std::size_t csize) {
        if (rn < rsize) {
            fftw_free(r);
            r = fftw_alloc_real(rsize);
            rn = rsize;
        }
        if (cn < csize) {
            fftw_free(c);
            c = fftw_alloc_complex(csize);
            cn = csize;
        }
    }
    ~Scratch() {
        fftw_free(r);
        fftw_free(c);
    }
};

thread_local Scratch scratch;

template <class Mult>
ScalarField apply_multiplier(const ScalarField& f, Parity out_parity, Mult&& mult) {
    const Grid& g = *f.grid;
    const PlanSet& ps = plans_for(g.nx, g.ny, g.nz);
    const int nxc = g.nx / 2 + 1;
    const std::size_t ncplx = std::size_t(g.ny) * nxc;
    scratch.ensure(g.num_nodes(), ncplx * g.nz);

    std::memcpy(scratch.r, f.v.data(), g.num_nodes() * sizeof(double));
    fftw_execute_dft_r2c(ps.fwd, scratch.r, scratch.c);

    const double norm = 1.0 / (double(g.nx) * g.ny);
    const double two_pi = 2.0 * std::numbers::pi;
    for (int jy = 0; jy < g.ny; ++jy) {
        int my = (jy <= g.ny / 2) ? jy : jy - g.ny;
        double ky = two_pi * my / g.ly;
        for (int jx = 0; jx < nxc; ++jx) {
            double kx = two_pi * jx / g.lx;
            std::complex<double> s = mult(jx, jy, kx, ky);
            s *= norm;
            for (int k = 0; k < g.nz; ++k) {
                fftw_complex& cz = scratch.c[std::size_t(k) * ncplx + std::size_t(jy) * nxc + jx];
                std::complex<double> val(cz[0], cz[1]);
                val *= s;
                cz[0] = val.real();
                cz[1] = val.imag();
            }
        }
    }

    fftw_execute_dft_c2r(ps.bwd, scratch.c, scratch.r);
    ScalarField out(f.grid, out_parity);
    std::memcpy(out.v.data(), scratch.r, g.num_nodes() * sizeof(double));
    return out;
}

}  // namespace

ScalarField deriv_h(const ScalarField& f, int axis) {
    const Grid& g = *f.grid;
    if (axis == 1) {
        return apply_multiplier(f, f.parity, [&](int jx, int, double kx, double) {
            if (jx == g.nx / 2) return std::complex<double>(0, 0);  // Nyquist
            return std::complex<double>(0, kx);
        });
    }
    if (axis == 2) {
        return apply_multiplier(f, f.parity, [&](int, int jy, double, double ky) {
            if (jy == g.ny / 2) return std::complex<double>(0, 0);
            return std::complex<double>(0, ky);
        });
    }
    throw std::invalid_argument("deriv_h axis must be 1 or 2");
}

ScalarField laplacian_h(const ScalarField& f) {
    return apply_multiplier(f, f.parity, [](int, int, double kx, double ky) {
        return std::complex<double>(-(kx * kx + ky * ky), 0);
    });
}

ScalarField multiplier_abs_pow(const ScalarField& f, double p) {
    return apply_multiplier(f, f.parity, [p](int jx, int jy, double kx, double ky) {
        if (jx == 0 && jy == 0) return std::complex<double>(0, 0);
        return std::complex<double>(std::pow(kx * kx + ky * ky, 0.5 * p), 0);
    });
}

ScalarField remove_horizontal_mean(const ScalarField& f, std::vector<double>* mean_part) {
    const Grid& g = *f.grid;
    ScalarField out = f;
    if (mean_part) mean_part->assign(g.nz, 0.0);
    const double inv = 1.0 / (double(g.nx) * g.ny);
    for (int k = 0; k < g.nz; ++k) {
        double m = 0;
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) m += f.at(i, j, k);
        m *= inv;
        if (mean_part) (*mean_part)[k] = m;
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) out.at(i, j, k) -= m;
    }
    return out;
}

void warm_plans(const Grid& g) { plans_for(g.nx, g.ny, g.nz); }

}  // namespace nslab::spectral
