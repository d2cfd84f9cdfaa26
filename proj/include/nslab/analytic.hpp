#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "nslab/field.hpp"

namespace nslab {

/// Truncated Taylor data (value and derivatives) of a 1-D function at a point.
template <int N>
struct TaylorJet {
    std::array<double, N + 1> c{};  // c[k] = f^(k)

    TaylorJet operator+(const TaylorJet& o) const {
        TaylorJet r;
        for (int k = 0; k <= N; ++k) r.c[k] = c[k] + o.c[k];
        return r;
    }
    TaylorJet operator*(double a) const {
        TaylorJet r;
        for (int k = 0; k <= N; ++k) r.c[k] = c[k] * a;
        return r;
    }
    /// Leibniz product.
    TaylorJet operator*(const TaylorJet& o) const {
        TaylorJet r;
        for (int k = 0; k <= N; ++k) {
            double s = 0.0, binom = 1.0;
            for (int j = 0; j <= k; ++j) {
                s += binom * c[j] * o.c[k - j];
                binom = binom * (k - j) / (j + 1.0);
            }
            r.c[k] = s;
        }
        return r;
    }
    /// Jet of the derivative (top order becomes unknown and is zeroed).
    TaylorJet shift() const {
        TaylorJet r;
        for (int k = 0; k < N; ++k) r.c[k] = c[k + 1];
        r.c[N] = 0.0;
        return r;
    }
};

constexpr int kJetOrder = 6;
using Jet = TaylorJet<kJetOrder>;

/// Jet of the conormal weight phi(z) = z/(1+z).
Jet phi_jet(double z);
/// Jet of A exp(-((z-c)/w)^2) via the Hermite recurrence.
Jet gaussian_jet(double z, double amp, double center, double width);
/// One application of Z3 = phi d/dz on a jet (top order lost).
Jet z3_on_jet(const Jet& f, const Jet& phi);

/// Smooth compactly supported window: exp(1 - 1/(1-y^2)) for |y|<1, else 0.
double bump(double y);
/// d/dy of bump (used only for diagnostics; closed form).
double bump_prime(double y);

/// Analytic field: finite Fourier sum in x_h times Gaussian vertical profiles,
/// with closed-form derivatives of every order used by the inequality bench.
/// Horizontal mean is zero as long as no term has m1 = m2 = 0.
struct TestField {
    struct Term {
        int m1 = 0, m2 = 0;
        double amp = 1.0, phase = 0.0;
        double gc = 0.0, gw = 1.0;  // Gaussian center/width
    };
    double lx = 0, ly = 0, height = 0;
    std::vector<Term> terms;
    std::uint64_t seed = 0;

    GridPtr make_grid(int nx, int ny, int nz) const;

    /// partial derivative d1^b1 d2^b2 d3^b3 f at a point, closed form.
    double eval_deriv(int b1, int b2, int b3, double x, double y, double z) const;
    /// Z3^j f at a point (j <= kJetOrder).
    double eval_z3(int j, double x, double y, double z) const;

    ScalarField sample_deriv(const GridPtr& g, int b1, int b2, int b3) const;
    ScalarField sample_z3(const GridPtr& g, int j) const;

    /// f(lam1 x1, lam2 x2, lam3 x3) on the correspondingly scaled domain.
    TestField scaled(double lam1, double lam2, double lam3) const;
};

enum class TestFamily { FourierBump, GaussianBump };

/// Deterministic corpus member; fields are zero-mean horizontally and their
/// vertical support stays inside (0, 3/4 height).
TestField make_test_field(TestFamily family, std::uint64_t seed, double lx, double ly,
                          double height);

}  // namespace nslab
