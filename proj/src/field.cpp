#include "nslab/field.hpp"

#include <cmath>
#include <stdexcept>

namespace nslab {

Parity flip(Parity p) {
    switch (p) {
        case Parity::Even: return Parity::Odd;
        case Parity::Odd: return Parity::Even;
        default: return Parity::None;
    }
}

Parity combine(Parity a, Parity b) {
    if (a == Parity::None || b == Parity::None) return Parity::None;
    return (a == b) ? Parity::Even : Parity::Odd;
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
    return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.v[i];
    return *this;
}

ScalarField& ScalarField::operator*=(double a) {
    for (auto& x : v) x *= a;
    return *this;
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator*(double a, ScalarField f) { return f *= a; }

void axpy(double a, const ScalarField& x, ScalarField& y) {
    for (std::size_t i = 0; i < y.v.size(); ++i) y.v[i] += a * x.v[i];
}

ScalarField multiply(const ScalarField& a, const ScalarField& b) {
    ScalarField r(a.grid, combine(a.parity, b.parity));
    for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = a.v[i] * b.v[i];
    return r;
}

ScalarField map_field(const ScalarField& a, Parity p, const std::function<double(double)>& fn) {
    ScalarField r(a.grid, p);
    for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = fn(a.v[i]);
    return r;
}

bool all_finite(const ScalarField& f) {
    for (double x : f.v)
        if (!std::isfinite(x)) return false;
    return true;
}

double min_value(const ScalarField& f) {
    double m = f.v.empty() ? 0.0 : f.v[0];
    for (double x : f.v) m = std::min(m, x);
    return m;
}

ScalarField sample_field(const GridPtr& g, Parity p,
                         const std::function<double(double, double, double)>& fn) {
    ScalarField f(g, p);
    for (int k = 0; k < g->nz; ++k) {
        double z = g->x3[k];
        for (int j = 0; j < g->ny; ++j) {
            double y = g->ly * j / g->ny;
            for (int i = 0; i < g->nx; ++i) {
                double x = g->lx * i / g->nx;
                f.at(i, j, k) = fn(x, y, z);
            }
        }
    }
    return f;
}

State operator+(State a, const State& b) {
    a.rho += b.rho;
    a.u1 += b.u1;
    a.u2 += b.u2;
    a.u3 += b.u3;
    return a;
}

State operator-(State a, const State& b) {
    a.rho -= b.rho;
    a.u1 -= b.u1;
    a.u2 -= b.u2;
    a.u3 -= b.u3;
    return a;
}

State operator*(double a, State s) {
    s.rho *= a;
    s.u1 *= a;
    s.u2 *= a;
    s.u3 *= a;
    return s;
}

void axpy(double a, const State& x, State& y) {
    axpy(a, x.rho, y.rho);
    axpy(a, x.u1, y.u1);
    axpy(a, x.u2, y.u2);
    axpy(a, x.u3, y.u3);
}

bool all_finite(const State& s) {
    return all_finite(s.rho) && all_finite(s.u1) && all_finite(s.u2) && all_finite(s.u3);
}

}  // namespace nslab
