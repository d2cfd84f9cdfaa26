#include "nslab/derivatives.hpp"

#include <stdexcept>

namespace nslab {

ScalarField dh(const ScalarField& f, int axis) { return spectral::deriv_h(f, axis); }

// 4th-order centered first derivative in x3. Wall closures: parity ghosts for
// Even/Odd fields, 4th-order biased rows otherwise. With parity ghosts the
// operator is the restriction of an antisymmetric Toeplitz operator on the
// reflected doubled domain, so the trapezoid pairing
//   <f, D g> + <D f, g> = 0   (f odd-type, g even-type)
// holds exactly; the discrete energy balance relies on this.
ScalarField dz(const ScalarField& f, Parity parity) {
    const Grid& g = *f.grid;
    const int nz = g.nz;
    if (nz < 8) throw std::invalid_argument("dz needs nz >= 8");
    ScalarField out(f.grid, parity == Parity::None ? Parity::None : flip(parity));

    const double c = 1.0 / (12.0 * g.dz);
    const std::size_t plane = std::size_t(g.nx) * g.ny;
    const double* in = f.v.data();
    double* ov = out.v.data();

    auto row = [&](int k, auto&& stencil) {
        const double* base = in + std::size_t(k) * plane;
        double* o = ov + std::size_t(k) * plane;
        for (std::size_t p = 0; p < plane; ++p) o[p] = stencil(base, p);
    };

    for (int k = 2; k < nz - 2; ++k) {
        const double* bm2 = in + std::size_t(k - 2) * plane;
        const double* bm1 = in + std::size_t(k - 1) * plane;
        const double* bp1 = in + std::size_t(k + 1) * plane;
        const double* bp2 = in + std::size_t(k + 2) * plane;
        double* o = ov + std::size_t(k) * plane;
        for (std::size_t p = 0; p < plane; ++p)
            o[p] = c * (-bp2[p] + 8.0 * bp1[p] - 8.0 * bm1[p] + bm2[p]);
    }

    const std::ptrdiff_t s = std::ptrdiff_t(plane);
    switch (parity) {
        case Parity::Even:
            row(0, [&](const double*, std::size_t) { return 0.0; });
            row(1, [&](const double* b, std::size_t p) {
                return c * (-b[p + 2 * s] + 8.0 * b[p + s] - 8.0 * b[p - s] + b[p]);
            });
            row(nz - 1, [&](const double*, std::size_t) { return 0.0; });
            row(nz - 2, [&](const double* b, std::size_t p) {
                return c * (-b[p] + 8.0 * b[p + s] - 8.0 * b[p - s] + b[p - 2 * s]);
            });
            break;
        case Parity::Odd:
            row(0, [&](const double* b, std::size_t p) {
                return c * (16.0 * b[p + s] - 2.0 * b[p + 2 * s]);
            });
            row(1, [&](const double* b, std::size_t p) {
                return c * (-b[p + 2 * s] + 8.0 * b[p + s] - 8.0 * b[p - s] - b[p]);
            });
            row(nz - 1, [&](const double* b, std::size_t p) {
                return c * (2.0 * b[p - 2 * s] - 16.0 * b[p - s]);
            });
            row(nz - 2, [&](const double* b, std::size_t p) {
                return c * (b[p] + 8.0 * b[p + s] - 8.0 * b[p - s] + b[p - 2 * s]);
            });
            break;
        case Parity::None:
            row(0, [&](const double* b, std::size_t p) {
                return c * (-25.0 * b[p] + 48.0 * b[p + s] - 36.0 * b[p + 2 * s] +
                            16.0 * b[p + 3 * s] - 3.0 * b[p + 4 * s]);
            });
            row(1, [&](const double* b, std::size_t p) {
                return c * (-3.0 * b[p - s] - 10.0 * b[p] + 18.0 * b[p + s] - 6.0 * b[p + 2 * s] +
                            b[p + 3 * s]);
            });
            row(nz - 1, [&](const double* b, std::size_t p) {
                return c * (25.0 * b[p] - 48.0 * b[p - s] + 36.0 * b[p - 2 * s] -
                            16.0 * b[p - 3 * s] + 3.0 * b[p - 4 * s]);
            });
            row(nz - 2, [&](const double* b, std::size_t p) {
                return c * (3.0 * b[p + s] + 10.0 * b[p] - 18.0 * b[p - s] + 6.0 * b[p - 2 * s] -
                            b[p - 3 * s]);
            });
            break;
    }
    return out;
}

ScalarField dz(const ScalarField& f) { return dz(f, f.parity); }

ScalarField dz2(const ScalarField& f) { return dz(dz(f)); }

ScalarField grad(const ScalarField& f, int axis) {
    if (axis == 3) return dz(f);
    return dh(f, axis);
}

ScalarField divergence(const ScalarField& u1, const ScalarField& u2, const ScalarField& u3) {
    ScalarField d = dh(u1, 1);
    d += dh(u2, 2);
    d += dz(u3);
    d.parity = Parity::Even;
    return d;
}

void curl_h(const ScalarField& u1, const ScalarField& u2, const ScalarField& u3, ScalarField& w1,
            ScalarField& w2) {
    w1 = dh(u3, 2) - dz(u2);
    w1.parity = Parity::Odd;
    w2 = dz(u1) - dh(u3, 1);
    w2.parity = Parity::Odd;
}

ScalarField curl_3(const ScalarField& u1, const ScalarField& u2) {
    ScalarField w = dh(u2, 1) - dh(u1, 2);
    w.parity = Parity::Even;
    return w;
}

VectorDerivatives vector_calculus(const ScalarField& u1, const ScalarField& u2,
                                  const ScalarField& u3) {
    VectorDerivatives vd;
    vd.div = divergence(u1, u2, u3);
    vd.grad_div1 = dh(vd.div, 1);
    vd.grad_div2 = dh(vd.div, 2);
    vd.grad_div3 = dz(vd.div);
    vd.lap_h1 = spectral::laplacian_h(u1);
    vd.lap_h2 = spectral::laplacian_h(u2);
    vd.lap_h3 = spectral::laplacian_h(u3);
    curl_h(u1, u2, u3, vd.curl_h1, vd.curl_h2);
    return vd;
}

State apply_slip_bc(State s) {
    const Grid& g = *s.u3.grid;
    const std::size_t plane = std::size_t(g.nx) * g.ny;
    double* v = s.u3.v.data();
    for (std::size_t p = 0; p < plane; ++p) v[p] = 0.0;
    double* top = v + std::size_t(g.nz - 1) * plane;
    for (std::size_t p = 0; p < plane; ++p) top[p] = 0.0;
    return s;
}

}  // namespace nslab
