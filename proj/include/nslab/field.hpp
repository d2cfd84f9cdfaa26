#pragma once

#include <functional>
#include <vector>

#include "nslab/grid.hpp"

namespace nslab {

/// Vertical ghost-extension class of a field across the walls.
///
/// Even:  f(-z) =  f(z)   (wall-parallel velocity, d3 f = 0 at walls)
/// Odd:   f(-z) = -f(z)   (wall-normal velocity, f = 0 at walls)
/// None:  no extension assumed; one-sided stencils at the walls
enum class Parity { Even, Odd, None };

Parity flip(Parity p);
Parity combine(Parity a, Parity b);  // parity of a pointwise product

/// Real scalar samples on every grid node, x1 fastest.
struct ScalarField {
    GridPtr grid;
    Parity parity = Parity::None;
    std::vector<double> v;

    ScalarField() = default;
    explicit ScalarField(GridPtr g, Parity p = Parity::None)
        : grid(std::move(g)), parity(p), v(grid->num_nodes(), 0.0) {}

    double& at(int i, int j, int k) { return v[grid->idx(i, j, k)]; }
    double at(int i, int j, int k) const { return v[grid->idx(i, j, k)]; }
    std::size_t size() const { return v.size(); }

    ScalarField& operator+=(const ScalarField& o);
    ScalarField& operator-=(const ScalarField& o);
    ScalarField& operator*=(double a);
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator*(double a, ScalarField f);

/// y += a*x (parities untouched).
void axpy(double a, const ScalarField& x, ScalarField& y);
/// Pointwise product with parity bookkeeping.
ScalarField multiply(const ScalarField& a, const ScalarField& b);
/// Pointwise map: out_i = fn(a_i); resulting parity given explicitly.
ScalarField map_field(const ScalarField& a, Parity p, const std::function<double(double)>& fn);

bool all_finite(const ScalarField& f);
double min_value(const ScalarField& f);

/// Fill from a closed form f(x1,x2,x3).
ScalarField sample_field(const GridPtr& g, Parity p,
                         const std::function<double(double, double, double)>& fn);

/// Density perturbation and velocity; the solver's evolved object.
struct State {
    ScalarField rho;  // perturbation of density about 1
    ScalarField u1, u2, u3;

    State() = default;
    explicit State(const GridPtr& g)
        : rho(g, Parity::None), u1(g, Parity::Even), u2(g, Parity::Even), u3(g, Parity::Odd) {}
};

State operator+(State a, const State& b);
State operator-(State a, const State& b);
State operator*(double a, State s);
void axpy(double a, const State& x, State& y);
bool all_finite(const State& s);

}  // namespace nslab
