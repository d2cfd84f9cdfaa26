#pragma once

#include "nslab/dynamics.hpp"

namespace nslab {

/// Itemized energy/dissipation functionals at one time. All items are
/// nonnegative and each total is the exact sum of its items.
struct EnergyReport {
    double t = 0.0;
    int m = 5;
    double zeta = 0.0, eps = 0.0;
    bool below_theory_order = false;  // m < 5 fast mode

    // energy items
    double e_co = 0;            // |(rho,u)|^2_{H^m_co}
    double e_d3 = 0;            // |d3(rho,u)|^2_{H^{m-1}_co}
    double e_wh_inf3 = 0;       // |w_h|^3_inf
    double e_d3rho_inf3 = 0;    // |d3 rho|^3_inf
    double e_neg = 0;           // negative-order block, zero-mean part
    double e_neg_d3 = 0;
    double e_dt_tan = 0;        // |dt(u, w_h, d3 u3)|^2_{H^2_tan}
    double e_dt_z3 = 0;         // |Z3 dt(w_h, d3 u3)|^2
    double e_eps_d3sq_rho = 0;  // eps |d3^2 rho|^2_{H^2_co}
    double E_total = 0;

    // dissipation items
    double d_gradh = 0;         // |grad_h u|^2_{H^m_co}
    double d_div = 0;           // |div u|^2_{H^m_co}
    double d_eps_d3u = 0;       // eps |d3 u|^2_{H^m_co}
    double d_d3_gradh = 0;      // |d3 grad_h u|^2_{H^{m-1}_co}
    double d_d3_div = 0;        // |d3 div u|^2_{H^{m-1}_co}
    double d_eps_d3sq_u = 0;    // eps |d3^2 u|^2_{H^{m-1}_co}
    double d_dt_tan = 0;        // |dt(grad_h u, div u, grad_h w_h, grad d3 u3)|^2_{H^2_tan}
    double d_dt_z3 = 0;         // |Z3 dt(grad_h w_h, grad d3 u3)|^2
    double d_eps_dt = 0;        // eps (d3 dt u, d3 dt w_h, d3 Z3 dt w_h) block
    double d_grad_rho = 0;      // |grad rho|^2_{H^{m-1}_co}
    double d_eps_d3sq_rho = 0;  // eps |d3^2 rho|^2_{H^2_co}
    double D_total = 0;

    // tangential functionals
    double E_tan = 0, D_tan = 0, E_bar_tan = 0, D_bar_tan = 0;

    // scalar traces
    double wh_inf = 0, d3rho_inf = 0;
    double neg_mean_l2 = 0;  // magnitude of the dropped horizontal mean
};

/// Assemble every functional from a state; time-derivative blocks come from a
/// tendency evaluation, never from temporal differencing.
EnergyReport energy_report(const State& s, const SolverParams& p, const DecayParams& decay,
                           int m, double t = 0.0);

/// Closed-form solution of y' = -kappa C0^{-1/s} y^{1+1/s}:
/// y(t) = (y0^{-1/s} + (kappa/s) C0^{-1/s} t)^{-s}.
double ode_decay_solution(double y0, double kappa, double C0, double s, double t);

struct Sample {
    double t = 0.0;
    EnergyReport rep;
    double mass = 0.0;        // integral of rho
    double mass_drift = 0.0;  // mass - mass(0)
    double res_eq23 = 0.0, res_eq25 = 0.0, res_vort = 0.0;
};

struct TimeSeries {
    std::vector<Sample> samples;
    std::string abort_reason;  // empty = clean run
    bool aborted() const { return !abort_reason.empty(); }
};

struct WeightedIntegrals {
    double I_D = 0;            // integral of D
    double I_Dtan_sigma = 0;   // integral of (1+t)^sigma D_tan
    double I_Dbar_1sigma = 0;  // integral of (1+t)^{1+sigma} Dbar_tan
};

/// Trapezoid-in-time weighted dissipation integrals over the sampled series.
WeightedIntegrals weighted_integrals(const TimeSeries& series, const DecayParams& decay);

struct BootstrapReport {
    double delta = 0;
    std::vector<double> lhs;  // the six-term assumption quantity per sample
    double lhs_max = 0;
    bool closed = false;      // lhs <= delta throughout
};

/// Assemble sup E + sup (1+t)^s E_tan + sup (1+t)^{1+sigma} Ebar_tan plus the
/// three weighted dissipation integrals, cumulatively in time.
BootstrapReport bootstrap_monitor(const TimeSeries& series, const DecayParams& decay,
                                  double delta);

}  // namespace nslab
