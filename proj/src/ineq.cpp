#include "nslab/ineq.hpp"

#include <cmath>
#include <numbers>

namespace nslab {

namespace {

constexpr double kDegenerate = 1e-14;

void check_factor(double v) {
    if (!(v > kDegenerate)) throw DegenerateRhs("degenerate_rhs: a factor is numerically zero");
}

double couple(double a, double b) { return std::sqrt(a * a + b * b); }

double integral_abs3(const ScalarField& a, const ScalarField& b, const ScalarField& c) {
    const Grid& g = *a.grid;
    const std::size_t plane = std::size_t(g.nx) * g.ny;
    double total = 0.0;
    for (int k = 0; k < g.nz; ++k) {
        const double* pa = a.v.data() + std::size_t(k) * plane;
        const double* pb = b.v.data() + std::size_t(k) * plane;
        const double* pc = c.v.data() + std::size_t(k) * plane;
        double s = 0.0;
        for (std::size_t p = 0; p < plane; ++p) s += std::abs(pa[p] * pb[p] * pc[p]);
        total += s * g.zweight(k);
    }
    return total * g.hcell();
}

// L^{2/s} over the torus of the vertical sup of |f|.
double mixed_linf_lp(const ScalarField& f, double s) {
    const Grid& g = *f.grid;
    const std::size_t plane = std::size_t(g.nx) * g.ny;
    double acc = 0.0;
    for (std::size_t p = 0; p < plane; ++p) {
        double vmax = 0.0;
        for (int k = 0; k < g.nz; ++k)
            vmax = std::max(vmax, std::abs(f.v[std::size_t(k) * plane + p]));
        acc += std::pow(vmax, 2.0 / s);
    }
    acc = acc / double(plane) * g.lx * g.ly;
    return std::pow(acc, s / 2.0);
}

// vertical L2 of the per-slice horizontal L^p norm
double lp_h_l2_z(const ScalarField& f, double p) {
    const Grid& g = *f.grid;
    const std::size_t plane = std::size_t(g.nx) * g.ny;
    double total = 0.0;
    for (int k = 0; k < g.nz; ++k) {
        const double* a = f.v.data() + std::size_t(k) * plane;
        double s = 0.0;
        for (std::size_t q = 0; q < plane; ++q) s += std::pow(std::abs(a[q]), p);
        double slice = std::pow(s / double(plane) * g.lx * g.ly, 1.0 / p);
        total += slice * slice * g.zweight(k);
    }
    return std::sqrt(total);
}

}  // namespace

const char* inequality_name(InequalityId id) {
    switch (id) {
        case InequalityId::AnisoLinf: return "aniso_linf";
        case InequalityId::TripleProduct: return "triple_product";
        case InequalityId::TripleSplit: return "triple_split";
        case InequalityId::Z3InterpCubic: return "z3_interp_cubic";
        case InequalityId::Z3InterpQuartic: return "z3_interp_quartic";
        case InequalityId::MixedLinfLp: return "mixed_linf_lp";
        case InequalityId::Z3TwoTerm: return "z3_two_term";
        case InequalityId::NegOrderLp: return "neg_order_lp";
    }
    return "?";
}

RatioReport ratio(const TestField& f, InequalityId id, const RatioParams& prm) {
    RatioReport rep;
    rep.id = id;
    rep.seed = f.seed;
    GridPtr g = f.make_grid(prm.nx, prm.ny, prm.nz);

    switch (id) {
        case InequalityId::AnisoLinf: {
            ScalarField f0 = f.sample_deriv(g, 0, 0, 0);
            rep.lhs = linf(f0);
            double rhs = 1.0;
            const int combos[8][3] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0},
                                      {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
            for (auto& c : combos) {
                double fac = l2_norm(f.sample_deriv(g, c[0], c[1], c[2]));
                check_factor(fac);
                rhs *= std::pow(fac, 1.0 / 8.0);
            }
            rep.rhs = rhs;
            break;
        }
        case InequalityId::Z3InterpCubic: {
            double l2 = l2_norm(f.sample_deriv(g, 0, 0, 0));
            double z3 = l2_norm(f.sample_z3(g, 1));
            double z33 = l2_norm(f.sample_z3(g, 3));
            check_factor(l2);
            double pair = couple(l2, z33);
            check_factor(pair);
            rep.lhs = z3;
            rep.rhs = std::pow(l2, 2.0 / 3.0) * std::pow(pair, 1.0 / 3.0);
            break;
        }
        case InequalityId::Z3InterpQuartic: {
            double l2 = l2_norm(f.sample_deriv(g, 0, 0, 0));
            double z3 = l2_norm(f.sample_z3(g, 1));
            double z34 = l2_norm(f.sample_z3(g, 4));
            check_factor(l2);
            double pair = couple(l2, z34);
            check_factor(pair);
            rep.lhs = z3;
            rep.rhs = std::pow(l2, 3.0 / 4.0) * std::pow(pair, 1.0 / 4.0);
            break;
        }
        case InequalityId::MixedLinfLp: {
            if (!(prm.s > 0.5 && prm.s < 1.0))
                throw std::invalid_argument("item 6 needs s in (1/2, 1)");
            ScalarField f0 = f.sample_deriv(g, 0, 0, 0);
            double l2 = l2_norm(f0);
            double d1 = l2_norm(f.sample_deriv(g, 1, 0, 0));
            double d2 = l2_norm(f.sample_deriv(g, 0, 1, 0));
            double d12 = l2_norm(f.sample_deriv(g, 1, 1, 0));
            double d3 = l2_norm(f.sample_deriv(g, 0, 0, 1));
            check_factor(l2);
            check_factor(d3);
            double paren = l2 * d2 + d1 * d12;
            check_factor(paren);
            rep.lhs = mixed_linf_lp(f0, prm.s);
            rep.rhs = std::pow(paren, (1.0 - prm.s) / 2.0) * std::pow(l2, (2.0 * prm.s - 1.0) / 2.0) *
                      std::pow(d3, 0.5);
            break;
        }
        case InequalityId::Z3TwoTerm: {
            double l2 = l2_norm(f.sample_deriv(g, 0, 0, 0));
            double z3 = l2_norm(f.sample_z3(g, 1));
            double z32 = l2_norm(f.sample_z3(g, 2));
            check_factor(l2);
            rep.lhs = z3;
            rep.rhs = l2 + std::sqrt(l2) * std::sqrt(z32);
            break;
        }
        case InequalityId::NegOrderLp: {
            // q = 2 and 1/q + alpha/2 = 1/p force p = 2/(1+alpha) in (1,2)
            double alpha = prm.alpha;
            if (!(alpha > 0.0 && alpha < 1.0))
                throw std::invalid_argument("alpha out of (0,1): p = 2/(1+alpha) must be in (1,2)");
            double p = 2.0 / (1.0 + alpha);
            if (!(p > 1.0 && p < 2.0))
                throw std::invalid_argument("alpha out of (0,1): p = 2/(1+alpha) must be in (1,2)");
            ScalarField f0 = f.sample_deriv(g, 0, 0, 0);
            ScalarField neg = lambda_h_pow(f0, -alpha);
            rep.lhs = l2_norm(neg);
            rep.rhs = lp_h_l2_z(f0, p);
            check_factor(rep.rhs);
            break;
        }
        default:
            throw std::invalid_argument("this inequality id needs three fields");
    }
    rep.ratio = rep.lhs / rep.rhs;
    return rep;
}

RatioReport ratio(const TestField& f, const TestField& g2, const TestField& h, InequalityId id,
                  const RatioParams& prm) {
    RatioReport rep;
    rep.id = id;
    rep.seed = f.seed;
    GridPtr g = f.make_grid(prm.nx, prm.ny, prm.nz);
    ScalarField ff = f.sample_deriv(g, 0, 0, 0);
    ScalarField gg = g2.sample_deriv(g, 0, 0, 0);
    ScalarField hh = h.sample_deriv(g, 0, 0, 0);
    rep.lhs = integral_abs3(ff, gg, hh);
    switch (id) {
        case InequalityId::TripleProduct: {
            // i = 1 on g; (j,k) = (2,3) on h
            double nf = l2_norm(ff);
            double ng = l2_norm(gg), ng1 = l2_norm(g2.sample_deriv(g, 1, 0, 0));
            double nh = l2_norm(hh);
            double nh2 = l2_norm(h.sample_deriv(g, 0, 1, 0));
            double nh3 = l2_norm(h.sample_deriv(g, 0, 0, 1));
            double nh23 = l2_norm(h.sample_deriv(g, 0, 1, 1));
            for (double v : {nf, ng, ng1, nh, nh2, nh3, nh23}) check_factor(v);
            rep.rhs = nf * std::sqrt(ng) * std::sqrt(ng1) * std::pow(nh, 0.25) *
                      std::pow(nh2, 0.25) * std::pow(nh3, 0.25) * std::pow(nh23, 0.25);
            break;
        }
        case InequalityId::TripleSplit: {
            double nf = l2_norm(ff), nf1 = l2_norm(f.sample_deriv(g, 1, 0, 0));
            double ng = l2_norm(gg), ng2 = l2_norm(g2.sample_deriv(g, 0, 1, 0));
            double nh = l2_norm(hh), nh3 = l2_norm(h.sample_deriv(g, 0, 0, 1));
            for (double v : {nf, nf1, ng, ng2, nh, nh3}) check_factor(v);
            rep.rhs = std::sqrt(nf * nf1) * std::sqrt(ng * ng2) * std::sqrt(nh * nh3);
            break;
        }
        default:
            throw std::invalid_argument("this inequality id takes one field");
    }
    rep.ratio = rep.lhs / rep.rhs;
    return rep;
}

double scaling_invariance(const TestField& f, InequalityId id, double lam1, double lam2,
                          double lam3, const RatioParams& prm) {
    if (id != InequalityId::AnisoLinf)
        throw std::invalid_argument("scaling invariance applies to the scale-balanced item only");
    double base = ratio(f, id, prm).ratio;
    double scaled = ratio(f.scaled(lam1, lam2, lam3), id, prm).ratio;
    return std::abs(scaled - base);
}

std::vector<RatioReport> ratio_corpus(InequalityId id, int n, std::uint64_t seed,
                                      const RatioParams& prm) {
    std::vector<RatioReport> out;
    out.reserve(n);
    std::uint64_t draw = 0;
    const double lx = 2.0 * std::numbers::pi, ly = 2.0 * std::numbers::pi, height = 10.0;
    while (int(out.size()) < n) {
        std::uint64_t s0 = seed + 1000003ull * draw++;
        TestFamily fam = (s0 % 2 == 0) ? TestFamily::FourierBump : TestFamily::GaussianBump;
        try {
            RatioReport rep;
            if (id == InequalityId::TripleProduct || id == InequalityId::TripleSplit) {
                TestField a = make_test_field(fam, s0 * 3 + 0, lx, ly, height);
                TestField b = make_test_field(fam, s0 * 3 + 1, lx, ly, height);
                TestField c = make_test_field(fam, s0 * 3 + 2, lx, ly, height);
                rep = ratio(a, b, c, id, prm);
            } else {
                rep = ratio(make_test_field(fam, s0, lx, ly, height), id, prm);
            }
            rep.seed = s0;
            out.push_back(rep);
        } catch (const DegenerateRhs&) {
            // excluded from the corpus rather than scored
        }
    }
    return out;
}

}  // namespace nslab
