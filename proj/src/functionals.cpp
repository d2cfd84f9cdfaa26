#include "nslab/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace nslab {

namespace {

double cube(double x) { return x * x * x; }

// L2 magnitude of the per-plane horizontal means of a field.
double mean_part_l2_sq(const ScalarField& f) {
    const Grid& g = *f.grid;
    const std::size_t plane = std::size_t(g.nx) * g.ny;
    const double inv = 1.0 / double(plane);
    double total = 0.0;
    for (int k = 0; k < g.nz; ++k) {
        const double* a = f.v.data() + std::size_t(k) * plane;
        double m = 0.0;
        for (std::size_t p = 0; p < plane; ++p) m += a[p];
        m *= inv;
        total += m * m * g.zweight(k);
    }
    return total * g.lx * g.ly;
}

}  // namespace

EnergyReport energy_report(const State& s, const SolverParams& p, const DecayParams& decay,
                           int m, double t) {
    if (m < 3) throw std::invalid_argument("energy report needs m >= 3");
    EnergyReport r;
    r.t = t;
    r.m = m;
    r.zeta = decay.zeta;
    r.eps = p.eps;
    r.below_theory_order = m < 5;

    const double eps = p.eps;

    // primitive derived fields
    ScalarField d3rho = dz(s.rho, Parity::None);
    ScalarField d3u1 = dz(s.u1), d3u2 = dz(s.u2), d3u3 = dz(s.u3);
    ScalarField div = divergence(s.u1, s.u2, s.u3);
    ScalarField d3div = dz(div, Parity::Even);
    ScalarField d3sq_u1 = dz(d3u1), d3sq_u2 = dz(d3u2), d3sq_u3 = dz(d3u3);
    ScalarField d3sq_rho = dz(d3rho, Parity::None);
    ScalarField w1, w2;
    curl_h(s.u1, s.u2, s.u3, w1, w2);

    // time-derivative fields, always via the equations' right-hand side
    StateTendency td = tendency_eqr(s, p, t);
    ScalarField dtw1, dtw2;
    curl_h(td.d_u1, td.d_u2, td.d_u3, dtw1, dtw2);
    ScalarField dt_d3u3 = dz(td.d_u3);
    ScalarField div_dt = divergence(td.d_u1, td.d_u2, td.d_u3);
    ScalarField d3_dtu1 = dz(td.d_u1), d3_dtu2 = dz(td.d_u2), d3_dtu3 = dz(td.d_u3);
    ScalarField d3_dtw1 = dz(dtw1), d3_dtw2 = dz(dtw2);
    ScalarField d3_dt_d3u3 = dz(dt_d3u3);
    ScalarField z3_dtw1 = z_apply(dtw1, 3), z3_dtw2 = z_apply(dtw2, 3);
    ScalarField z3_dt_d3u3 = z_apply(dt_d3u3, 3);

    // jets of conormal norms
    JetNorms jr(s.rho, m);
    JetNorms ju1(s.u1, m + 1), ju2(s.u2, m + 1), ju3(s.u3, m + 1);
    JetNorms jdiv(div, m);
    JetNorms jd3r(d3rho, m - 1);
    JetNorms jd3u1(d3u1, m), jd3u2(d3u2, m), jd3u3(d3u3, m);
    JetNorms jd3div(d3div, m - 1);
    JetNorms jd3squ1(d3sq_u1, m - 1), jd3squ2(d3sq_u2, m - 1), jd3squ3(d3sq_u3, m - 1);
    JetNorms jd3sqr(d3sq_rho, 2);

    JetNorms jt_dtu1(td.d_u1, 3, true), jt_dtu2(td.d_u2, 3, true), jt_dtu3(td.d_u3, 3, true);
    JetNorms jt_dtw1(dtw1, 3, true), jt_dtw2(dtw2, 3, true);
    JetNorms jt_dtd3u3(dt_d3u3, 3, true);
    JetNorms jt_divdt(div_dt, 2, true);
    JetNorms jt_d3dtu1(d3_dtu1, 2, true), jt_d3dtu2(d3_dtu2, 2, true), jt_d3dtu3(d3_dtu3, 2, true);
    JetNorms jt_d3dtw1(d3_dtw1, 2, true), jt_d3dtw2(d3_dtw2, 2, true);
    JetNorms jt_d3dtd3u3(d3_dt_d3u3, 2, true);

    // ---- energy items ----
    r.e_co = jr.co_sq(m) + ju1.co_sq(m) + ju2.co_sq(m) + ju3.co_sq(m);
    r.e_d3 = jd3r.co_sq(m - 1) + jd3u1.co_sq(m - 1) + jd3u2.co_sq(m - 1) + jd3u3.co_sq(m - 1);
    r.wh_inf = std::max(linf(w1), linf(w2));
    r.d3rho_inf = linf(d3rho);
    r.e_wh_inf3 = cube(r.wh_inf);
    r.e_d3rho_inf3 = cube(r.d3rho_inf);

    const double sneg = decay.s;  // negative order 1 - zeta
    r.e_neg = l2_norm_sq(lambda_h_neg(s.rho, sneg)) + l2_norm_sq(lambda_h_neg(s.u1, sneg)) +
              l2_norm_sq(lambda_h_neg(s.u2, sneg)) + l2_norm_sq(lambda_h_neg(s.u3, sneg));
    r.e_neg_d3 = l2_norm_sq(lambda_h_neg(d3rho, sneg)) + l2_norm_sq(lambda_h_neg(d3u1, sneg)) +
                 l2_norm_sq(lambda_h_neg(d3u2, sneg)) + l2_norm_sq(lambda_h_neg(d3u3, sneg));
    r.neg_mean_l2 = std::sqrt(mean_part_l2_sq(s.rho) + mean_part_l2_sq(s.u1) +
                              mean_part_l2_sq(s.u2) + mean_part_l2_sq(s.u3));

    r.e_dt_tan = jt_dtu1.tan_sq(2) + jt_dtu2.tan_sq(2) + jt_dtu3.tan_sq(2) + jt_dtw1.tan_sq(2) +
                 jt_dtw2.tan_sq(2) + jt_dtd3u3.tan_sq(2);
    r.e_dt_z3 = l2_norm_sq(z3_dtw1) + l2_norm_sq(z3_dtw2) + l2_norm_sq(z3_dt_d3u3);
    r.e_eps_d3sq_rho = eps * jd3sqr.co_sq(2);

    r.E_total = r.e_co + r.e_d3 + r.e_wh_inf3 + r.e_d3rho_inf3 + r.e_neg + r.e_neg_d3 +
                r.e_dt_tan + r.e_dt_z3 + r.e_eps_d3sq_rho;

    // ---- dissipation items ----
    r.d_gradh = ju1.gradh_co_sq(m) + ju2.gradh_co_sq(m) + ju3.gradh_co_sq(m);
    r.d_div = jdiv.co_sq(m);
    r.d_eps_d3u = eps * (jd3u1.co_sq(m) + jd3u2.co_sq(m) + jd3u3.co_sq(m));
    r.d_d3_gradh =
        jd3u1.gradh_co_sq(m - 1) + jd3u2.gradh_co_sq(m - 1) + jd3u3.gradh_co_sq(m - 1);
    r.d_d3_div = jd3div.co_sq(m - 1);
    r.d_eps_d3sq_u = eps * (jd3squ1.co_sq(m - 1) + jd3squ2.co_sq(m - 1) + jd3squ3.co_sq(m - 1));

    double dt_gradh_u = jt_dtu1.gradh_tan_sq(2) + jt_dtu2.gradh_tan_sq(2) + jt_dtu3.gradh_tan_sq(2);
    double dt_div = jt_divdt.tan_sq(2);
    double dt_gradh_w = jt_dtw1.gradh_tan_sq(2) + jt_dtw2.gradh_tan_sq(2);
    double dt_grad_d3u3 = jt_dtd3u3.gradh_tan_sq(2) + jt_d3dtd3u3.tan_sq(2);
    r.d_dt_tan = dt_gradh_u + dt_div + dt_gradh_w + dt_grad_d3u3;

    r.d_dt_z3 = l2_norm_sq(z_apply(dh(dtw1, 1), 3)) + l2_norm_sq(z_apply(dh(dtw1, 2), 3)) +
                l2_norm_sq(z_apply(dh(dtw2, 1), 3)) + l2_norm_sq(z_apply(dh(dtw2, 2), 3)) +
                l2_norm_sq(z_apply(dh(dt_d3u3, 1), 3)) + l2_norm_sq(z_apply(dh(dt_d3u3, 2), 3)) +
                l2_norm_sq(z_apply(d3_dt_d3u3, 3));

    r.d_eps_dt = eps * (jt_d3dtu1.tan_sq(2) + jt_d3dtu2.tan_sq(2) + jt_d3dtu3.tan_sq(2) +
                        jt_d3dtw1.tan_sq(2) + jt_d3dtw2.tan_sq(2) + l2_norm_sq(dz(z3_dtw1)) +
                        l2_norm_sq(dz(z3_dtw2)));

    r.d_grad_rho = jr.gradh_co_sq(m - 1) + jd3r.co_sq(m - 1);
    r.d_eps_d3sq_rho = eps * jd3sqr.co_sq(2);

    r.D_total = r.d_gradh + r.d_div + r.d_eps_d3u + r.d_d3_gradh + r.d_d3_div + r.d_eps_d3sq_u +
                r.d_dt_tan + r.d_dt_z3 + r.d_eps_dt + r.d_grad_rho + r.d_eps_d3sq_rho;

    // ---- tangential functionals ----
    r.E_tan = jr.tan_sq(m) + ju1.tan_sq(m) + ju2.tan_sq(m) + ju3.tan_sq(m) + jd3r.tan_sq(m - 1) +
              jd3u1.tan_sq(m - 1) + jd3u2.tan_sq(m - 1) + jd3u3.tan_sq(m - 1);
    r.E_bar_tan = jr.gradh_tan_sq(m - 2) + ju1.gradh_tan_sq(m - 2) + ju2.gradh_tan_sq(m - 2) +
                  ju3.gradh_tan_sq(m - 2) + jd3r.gradh_tan_sq(m - 3) + jd3u1.gradh_tan_sq(m - 3) +
                  jd3u2.gradh_tan_sq(m - 3) + jd3u3.gradh_tan_sq(m - 3);
    r.D_tan = ju1.gradh_tan_sq(m) + ju2.gradh_tan_sq(m) + ju3.gradh_tan_sq(m) + jdiv.tan_sq(m) +
              eps * (jd3u1.tan_sq(m) + jd3u2.tan_sq(m) + jd3u3.tan_sq(m)) +
              jd3u1.gradh_tan_sq(m - 1) + jd3u2.gradh_tan_sq(m - 1) + jd3u3.gradh_tan_sq(m - 1) +
              jd3div.tan_sq(m - 1) +
              eps * (jd3squ1.tan_sq(m - 1) + jd3squ2.tan_sq(m - 1) + jd3squ3.tan_sq(m - 1)) +
              jr.gradh_tan_sq(m - 1) + jd3r.tan_sq(m - 1);
    r.D_bar_tan =
        ju1.gradh2_tan_sq(m - 2) + ju2.gradh2_tan_sq(m - 2) + ju3.gradh2_tan_sq(m - 2) +
        jdiv.gradh_tan_sq(m - 2) +
        eps * (jd3u1.gradh_tan_sq(m - 2) + jd3u2.gradh_tan_sq(m - 2) + jd3u3.gradh_tan_sq(m - 2)) +
        jd3u1.gradh2_tan_sq(m - 3) + jd3u2.gradh2_tan_sq(m - 3) + jd3u3.gradh2_tan_sq(m - 3) +
        jd3div.gradh_tan_sq(m - 3) +
        eps * (jd3squ1.gradh_tan_sq(m - 3) + jd3squ2.gradh_tan_sq(m - 3) +
               jd3squ3.gradh_tan_sq(m - 3)) +
        jr.gradh2_tan_sq(m - 3) + jd3r.gradh_tan_sq(m - 3);

    return r;
}

double ode_decay_solution(double y0, double kappa, double C0, double s, double t) {
    if (!(y0 > 0) || !(kappa > 0) || !(C0 > 0))
        throw std::invalid_argument("ode_decay_solution needs positive y0, kappa, C0");
    if (!(s > 0) || s > 1.0) throw std::invalid_argument("ode_decay_solution needs s in (0,1]");
    double base = std::pow(y0, -1.0 / s) + (kappa / s) * std::pow(C0, -1.0 / s) * t;
    return std::pow(base, -s);
}

WeightedIntegrals weighted_integrals(const TimeSeries& series, const DecayParams& decay) {
    if (series.samples.empty()) throw std::invalid_argument("weighted_integrals: empty series");
    WeightedIntegrals w;
    const auto& ss = series.samples;
    for (std::size_t i = 1; i < ss.size(); ++i) {
        double h = ss[i].t - ss[i - 1].t;
        auto wgt = [&](const Sample& a, double expo, double val) {
            return std::pow(1.0 + a.t, expo) * val;
        };
        w.I_D += 0.5 * h * (ss[i - 1].rep.D_total + ss[i].rep.D_total);
        w.I_Dtan_sigma += 0.5 * h *
                          (wgt(ss[i - 1], decay.sigma, ss[i - 1].rep.D_tan) +
                           wgt(ss[i], decay.sigma, ss[i].rep.D_tan));
        w.I_Dbar_1sigma += 0.5 * h *
                           (wgt(ss[i - 1], 1.0 + decay.sigma, ss[i - 1].rep.D_bar_tan) +
                            wgt(ss[i], 1.0 + decay.sigma, ss[i].rep.D_bar_tan));
    }
    return w;
}

BootstrapReport bootstrap_monitor(const TimeSeries& series, const DecayParams& decay,
                                  double delta) {
    BootstrapReport br;
    br.delta = delta;
    const auto& ss = series.samples;
    br.lhs.reserve(ss.size());
    double supE = 0, supS = 0, supSb = 0;
    double iD = 0, iS = 0, iSb = 0;
    for (std::size_t i = 0; i < ss.size(); ++i) {
        const auto& cur = ss[i];
        supE = std::max(supE, cur.rep.E_total);
        supS = std::max(supS, std::pow(1.0 + cur.t, decay.s) * cur.rep.E_tan);
        supSb = std::max(supSb, std::pow(1.0 + cur.t, 1.0 + decay.sigma) * cur.rep.E_bar_tan);
        if (i > 0) {
            const auto& pr = ss[i - 1];
            double h = cur.t - pr.t;
            iD += 0.5 * h * (pr.rep.D_total + cur.rep.D_total);
            iS += 0.5 * h *
                  (std::pow(1.0 + pr.t, decay.sigma) * pr.rep.D_tan +
                   std::pow(1.0 + cur.t, decay.sigma) * cur.rep.D_tan);
            iSb += 0.5 * h *
                   (std::pow(1.0 + pr.t, 1.0 + decay.sigma) * pr.rep.D_bar_tan +
                    std::pow(1.0 + cur.t, 1.0 + decay.sigma) * cur.rep.D_bar_tan);
        }
        br.lhs.push_back(supE + supS + supSb + iD + iS + iSb);
    }
    br.lhs_max = br.lhs.empty() ? 0.0 : br.lhs.back();
    for (double v : br.lhs) br.lhs_max = std::max(br.lhs_max, v);
    br.closed = br.lhs_max <= delta;
    return br;
}

}  // namespace nslab
