#include "nslab/analytic.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace nslab {

Jet phi_jet(double z) {
    // phi = 1 - 1/(1+z);  phi^(k) = (-1)^{k+1} k! (1+z)^{-(k+1)}, k >= 1
    Jet j;
    double w = 1.0 + z;
    j.c[0] = z / w;
    double fact = 1.0, pw = w * w;
    for (int k = 1; k <= kJetOrder; ++k) {
        j.c[k] = ((k % 2 == 1) ? 1.0 : -1.0) * fact / pw;
        fact *= (k + 1);
        pw *= w;
    }
    return j;
}

Jet gaussian_jet(double z, double amp, double center, double width) {
    Jet j;
    double y = (z - center) / width;
    double e = amp * std::exp(-y * y);
    // physicists' Hermite: H_0 = 1, H_1 = 2y, H_{k+1} = 2y H_k - 2k H_{k-1}
    double hkm1 = 0.0, hk = 1.0;
    double scale = 1.0;
    for (int k = 0; k <= kJetOrder; ++k) {
        j.c[k] = scale * hk * e;
        double hk1 = 2.0 * y * hk - 2.0 * k * hkm1;
        hkm1 = hk;
        hk = hk1;
        scale *= -1.0 / width;
    }
    return j;
}

Jet z3_on_jet(const Jet& f, const Jet& phi) { return phi * f.shift(); }

double bump(double y) {
    if (std::abs(y) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - y * y));
}

double bump_prime(double y) {
    if (std::abs(y) >= 1.0) return 0.0;
    double d = 1.0 - y * y;
    return bump(y) * (-2.0 * y / (d * d));
}

GridPtr TestField::make_grid(int nx, int ny, int nz) const {
    return build_grid(nx, ny, nz, lx, ly, height);
}

double TestField::eval_deriv(int b1, int b2, int b3, double x, double y, double z) const {
    const double two_pi = 2.0 * std::numbers::pi;
    double total = 0.0;
    for (const auto& t : terms) {
        double k1 = two_pi * t.m1 / lx;
        double k2 = two_pi * t.m2 / ly;
        double theta = k1 * x + k2 * y + t.phase + (b1 + b2) * std::numbers::pi / 2.0;
        double horiz = t.amp * std::pow(k1, b1) * std::pow(k2, b2) * std::cos(theta);
        Jet g = gaussian_jet(z, 1.0, t.gc, t.gw);
        total += horiz * g.c[b3];
    }
    return total;
}

double TestField::eval_z3(int j, double x, double y, double z) const {
    const double two_pi = 2.0 * std::numbers::pi;
    Jet phi = phi_jet(z);
    double total = 0.0;
    for (const auto& t : terms) {
        double k1 = two_pi * t.m1 / lx;
        double k2 = two_pi * t.m2 / ly;
        double horiz = t.amp * std::cos(k1 * x + k2 * y + t.phase);
        Jet g = gaussian_jet(z, 1.0, t.gc, t.gw);
        for (int i = 0; i < j; ++i) g = z3_on_jet(g, phi);
        total += horiz * g.c[0];
    }
    return total;
}

ScalarField TestField::sample_deriv(const GridPtr& g, int b1, int b2, int b3) const {
    return sample_field(g, Parity::None,
                        [&](double x, double y, double z) { return eval_deriv(b1, b2, b3, x, y, z); });
}

ScalarField TestField::sample_z3(const GridPtr& g, int j) const {
    return sample_field(g, Parity::None,
                        [&](double x, double y, double z) { return eval_z3(j, x, y, z); });
}

TestField TestField::scaled(double lam1, double lam2, double lam3) const {
    TestField r = *this;
    r.lx = lx / lam1;
    r.ly = ly / lam2;
    // keep the slab height; only the profile geometry contracts
    for (auto& t : r.terms) {
        t.gc = t.gc / lam3;
        t.gw = t.gw / lam3;
    }
    return r;
}

TestField make_test_field(TestFamily family, std::uint64_t seed, double lx, double ly,
                          double height) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 12345);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    TestField f;
    f.lx = lx;
    f.ly = ly;
    f.height = height;
    f.seed = seed;
    int nterms = (family == TestFamily::FourierBump) ? 3 : 1;
    for (int i = 0; i < nterms; ++i) {
        TestField::Term t;
        do {
            t.m1 = int(uni(rng) * 7) - 3;
            t.m2 = int(uni(rng) * 7) - 3;
        } while (t.m1 == 0 && t.m2 == 0);
        t.amp = 0.3 + 0.7 * uni(rng);
        t.phase = 2.0 * std::numbers::pi * uni(rng);
        if (family == TestFamily::FourierBump) {
            t.gc = height * (0.25 + 0.25 * uni(rng));
            t.gw = height * (0.06 + 0.06 * uni(rng));
        } else {
            t.gc = height * (0.3 + 0.1 * uni(rng));
            t.gw = height * (0.03 + 0.04 * uni(rng));
        }
        f.terms.push_back(t);
    }
    return f;
}

}  // namespace nslab
