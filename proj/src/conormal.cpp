#include "nslab/conormal.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace nslab {

namespace {
constexpr int kMaxEnumOrder = 9;

struct IndexTables {
    std::vector<MultiIndex> list;
    int id[kMaxEnumOrder + 1][kMaxEnumOrder + 1][kMaxEnumOrder + 1];
    IndexTables() {
        for (auto& a : id)
            for (auto& b : a)
                for (auto& c : b) c = -1;
        for (int o = 0; o <= kMaxEnumOrder; ++o)
            for (int a1 = o; a1 >= 0; --a1)
                for (int a2 = o - a1; a2 >= 0; --a2) {
                    int a3 = o - a1 - a2;
                    id[a1][a2][a3] = int(list.size());
                    list.push_back({a1, a2, a3});
                }
    }
};

const IndexTables& tables() {
    static IndexTables t;
    return t;
}
}  // namespace

int multi_index_id(const MultiIndex& a) {
    assert(a.order() <= kMaxEnumOrder);
    return tables().id[a.a1][a.a2][a.a3];
}

const std::vector<MultiIndex>& multi_indices_up_to(int order) {
    static std::vector<std::vector<MultiIndex>> cache = [] {
        std::vector<std::vector<MultiIndex>> c(kMaxEnumOrder + 1);
        for (const auto& a : tables().list)
            for (int o = a.order(); o <= kMaxEnumOrder; ++o) c[o].push_back(a);
        return c;
    }();
    if (order > kMaxEnumOrder) throw std::invalid_argument("multi-index order too large");
    return cache[order];
}

DecayParams::DecayParams(double zeta_) : zeta(zeta_), s(1.0 - zeta_), sigma(1.0 - 2.0 * zeta_) {
    if (!(zeta > 0.0) || zeta > 1.0 / 34.0 + 1e-15)
        throw std::invalid_argument("zeta must lie in (0, 1/34]");
}

ScalarField z_apply(const ScalarField& f, int k) {
    if (k == 1 || k == 2) return dh(f, k);
    if (k != 3) throw std::invalid_argument("z_apply k must be 1, 2 or 3");
    ScalarField d = dz(f);
    const Grid& g = *f.grid;
    ScalarField out(f.grid, Parity::None);
    const std::size_t plane = std::size_t(g.nx) * g.ny;
    for (int kk = 0; kk < g.nz; ++kk) {
        const double p = g.phi[kk];
        double* o = out.v.data() + std::size_t(kk) * plane;
        const double* in = d.v.data() + std::size_t(kk) * plane;
        for (std::size_t q = 0; q < plane; ++q) o[q] = p * in[q];
    }
    return out;
}

ScalarField z_alpha(const ScalarField& f, const MultiIndex& a) {
    ScalarField r = f;
    for (int i = 0; i < a.a1; ++i) r = z_apply(r, 1);
    for (int i = 0; i < a.a2; ++i) r = z_apply(r, 2);
    for (int i = 0; i < a.a3; ++i) r = z_apply(r, 3);
    return r;
}

double inner(const ScalarField& f, const ScalarField& g) {
    const Grid& gr = *f.grid;
    const std::size_t plane = std::size_t(gr.nx) * gr.ny;
    double total = 0.0;
    for (int k = 0; k < gr.nz; ++k) {
        const double* a = f.v.data() + std::size_t(k) * plane;
        const double* b = g.v.data() + std::size_t(k) * plane;
        double s = 0.0;
        for (std::size_t p = 0; p < plane; ++p) s += a[p] * b[p];
        total += s * gr.zweight(k);
    }
    return total * gr.hcell();
}

double l2_norm_sq(const ScalarField& f) { return inner(f, f); }
double l2_norm(const ScalarField& f) { return std::sqrt(l2_norm_sq(f)); }

double integral(const ScalarField& f) {
    const Grid& gr = *f.grid;
    const std::size_t plane = std::size_t(gr.nx) * gr.ny;
    double total = 0.0;
    for (int k = 0; k < gr.nz; ++k) {
        const double* a = f.v.data() + std::size_t(k) * plane;
        double s = 0.0;
        for (std::size_t p = 0; p < plane; ++p) s += a[p];
        total += s * gr.zweight(k);
    }
    return total * gr.hcell();
}

double linf(const ScalarField& f) {
    double m = 0.0;
    for (double x : f.v) m = std::max(m, std::abs(x));
    return m;
}

ScalarField lambda_h_neg(const ScalarField& f, double s) {
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("lambda_h_neg needs s in (0,1)");
    return spectral::multiplier_abs_pow(f, -s);
}

ScalarField lambda_h_pow(const ScalarField& f, double p) {
    return spectral::multiplier_abs_pow(f, p);
}

JetNorms::JetNorms(const ScalarField& f, int max_order, bool tan_only)
    : max_order_(max_order), tan_only_(tan_only) {
    if (max_order > kMaxEnumOrder) throw std::invalid_argument("jet order too large");
    sq_.assign(multi_indices_up_to(kMaxEnumOrder).size(), 0.0);

    // Depth-first over the derivative tree; each node derives from its parent
    // by one Z application, so only the current chain is held in memory.
    struct Walker {
        JetNorms& jn;
        void visit(const ScalarField& field, MultiIndex a) {
            jn.sq_[multi_index_id(a)] = l2_norm_sq(field);
            if (a.order() == jn.max_order_) return;
            if (a.a2 == 0 && a.a3 == 0) visit(z_apply(field, 1), {a.a1 + 1, a.a2, a.a3});
            if (a.a3 == 0) visit(z_apply(field, 2), {a.a1, a.a2 + 1, a.a3});
            if (!jn.tan_only_) visit(z_apply(field, 3), {a.a1, a.a2, a.a3 + 1});
        }
    };
    Walker{*this}.visit(f, {0, 0, 0});
}

double JetNorms::at(const MultiIndex& a) const {
    assert(a.order() <= max_order_);
    return sq_[multi_index_id(a)];
}

double JetNorms::co_sq(int m) const {
    assert(!tan_only_ && m <= max_order_);
    double s = 0.0;
    for (const auto& a : multi_indices_up_to(m)) s += sq_[multi_index_id(a)];
    return s;
}

double JetNorms::tan_sq(int m) const {
    assert(m <= max_order_);
    double s = 0.0;
    for (const auto& a : multi_indices_up_to(m))
        if (a.tangential()) s += sq_[multi_index_id(a)];
    return s;
}

double JetNorms::dot_tan_sq(int m) const {
    assert(m <= max_order_);
    double s = 0.0;
    for (const auto& a : multi_indices_up_to(m))
        if (a.tangential() && a.order() == m) s += sq_[multi_index_id(a)];
    return s;
}

double JetNorms::dot_co_sq(int m) const {
    assert(!tan_only_ && m <= max_order_);
    double s = 0.0;
    for (const auto& a : multi_indices_up_to(m))
        if (a.order() == m) s += sq_[multi_index_id(a)];
    return s;
}

double JetNorms::gradh_co_sq(int m) const {
    assert(!tan_only_ && m + 1 <= max_order_);
    double s = 0.0;
    for (const auto& a : multi_indices_up_to(m)) {
        s += sq_[tables().id[a.a1 + 1][a.a2][a.a3]];
        s += sq_[tables().id[a.a1][a.a2 + 1][a.a3]];
    }
    return s;
}

double JetNorms::gradh_tan_sq(int m) const {
    assert(m + 1 <= max_order_);
    double s = 0.0;
    for (const auto& a : multi_indices_up_to(m))
        if (a.tangential()) {
            s += sq_[tables().id[a.a1 + 1][a.a2][0]];
            s += sq_[tables().id[a.a1][a.a2 + 1][0]];
        }
    return s;
}

double JetNorms::gradh2_tan_sq(int m) const {
    assert(m + 2 <= max_order_);
    double s = 0.0;
    for (const auto& a : multi_indices_up_to(m))
        if (a.tangential()) {
            s += sq_[tables().id[a.a1 + 2][a.a2][0]];
            s += 2.0 * sq_[tables().id[a.a1 + 1][a.a2 + 1][0]];
            s += sq_[tables().id[a.a1][a.a2 + 2][0]];
        }
    return s;
}

double sobolev_norm(const ScalarField& f, const NormRequest& req) {
    if (req.m < 0) throw std::invalid_argument("norm order must be >= 0");
    const ScalarField* base = &f;
    ScalarField d3f;
    if (req.with_d3) {
        d3f = dz(f);
        base = &d3f;
    }
    JetNorms jet(*base, req.m, req.kind == NormKind::Tan);
    double sq = 0.0;
    if (req.kind == NormKind::Tan)
        sq = req.dotted ? jet.dot_tan_sq(req.m) : jet.tan_sq(req.m);
    else
        sq = req.dotted ? jet.dot_co_sq(req.m) : jet.co_sq(req.m);
    return std::sqrt(sq);
}

}  // namespace nslab
