#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "nslab/conormal.hpp"

namespace nslab {

/// Abort conditions raised by the integrator / tendency evaluation.
struct SimulationAbort : std::runtime_error {
    enum class Kind { Vacuum, Instability };
    Kind kind;
    SimulationAbort(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

/// External source on (rho, u); used for manufactured solutions.
struct Forcing {
    ScalarField f_rho, f_u1, f_u2, f_u3;
};
using ForcingFn = std::function<Forcing(double t, const GridPtr&)>;

struct SolverParams {
    double eps = 0.5;       // vertical viscosity in [0, 1)
    double gamma = 3.0;     // pressure exponent, > 1
    double dt = 0.0;        // 0 = auto from c_cfl
    double t_end = 50.0;
    double c_cfl = 0.5;
    bool linearized = false;
    double vacuum_floor = 0.1;  // abort when 1 + rho <= this
    ForcingFn forcing;          // optional
};

/// dt bound c_cfl * min((lx/(pi nx))^2, dz^2) / (2 + eps).
double stable_dt(const Grid& g, const SolverParams& p);

struct StateTendency {
    ScalarField d_rho, d_u1, d_u2, d_u3;
};

/// Right-hand side of the anisotropic perturbation system. The wall rows of
/// d_u3 are zeroed (slip-consistent projection), so d_u3 = 0 at walls exactly
/// on BC-compliant states. Throws SimulationAbort on vacuum.
StateTendency tendency_eqr(const State& s, const SolverParams& p, double t = 0.0);

/// The eps = 0 limit system; identical to tendency_eqr at eps = 0 on the same
/// inputs, bit for bit.
StateTendency tendency_eqr0(const State& s, const SolverParams& p, double t = 0.0);

/// Classical 4-stage explicit step with slip BC after each stage; throws
/// SimulationAbort("instability") when the L2 size grows more than tenfold in
/// one step or turns non-finite.
State rk4_step(const State& s, const SolverParams& p, double t, double dt,
               bool limit_system = false);

/// L2 residual of the vertical-momentum identity that extracts d3 div u.
/// The explicit vertical derivatives here use generic one-sided stencils, so
/// the residual measures the wall-stencil mismatch and converges to zero under
/// refinement instead of being algebraically zero.
double identity_residual_p3divu(const State& s, const SolverParams& p);

/// L2 residual of the damped transport equation for d3 rho.
double identity_residual_p3rho(const State& s, const SolverParams& p);

/// L2 residual of the horizontal-vorticity equation (curl of the momentum
/// equation).
double vorticity_tendency_residual(const State& s, const SolverParams& p);

/// Analytic state family for manufactured-solution runs.
struct AnalyticFamily {
    std::function<State(double t, const GridPtr&)> state_at;
    std::function<State(double t, const GridPtr&)> ddt_at;
};

/// forcing(t) = d/dt exact(t) - tendency(exact(t)); adding it makes exact a
/// solution of the forced semi-discrete system up to spatial truncation.
/// Throws std::invalid_argument when the family is not BC-compliant.
ForcingFn mms_forcing(const AnalyticFamily& family, const GridPtr& g, const SolverParams& p);

}  // namespace nslab
