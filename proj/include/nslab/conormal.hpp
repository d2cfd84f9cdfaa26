#pragma once

#include <array>
#include <string>
#include <vector>

#include "nslab/derivatives.hpp"

namespace nslab {

/// Exponents of the conormal derivative Z^a = Z1^a1 Z2^a2 Z3^a3,
/// Z1 = d1, Z2 = d2, Z3 = phi(x3) d3.
struct MultiIndex {
    int a1 = 0, a2 = 0, a3 = 0;
    int order() const { return a1 + a2 + a3; }
    bool tangential() const { return a3 == 0; }
};

enum class NormKind { Co, Tan };

struct NormRequest {
    int m = 0;
    NormKind kind = NormKind::Co;
    bool dotted = false;   // restrict to |alpha| = m
    bool with_d3 = false;  // prefix one d3
};

/// Decay bookkeeping exponents s = 1 - zeta, sigma = 1 - 2 zeta.
struct DecayParams {
    double zeta;
    double s;
    double sigma;
    /// throws std::invalid_argument unless 0 < zeta <= 1/34.
    explicit DecayParams(double zeta_);
};

/// One conormal derivative; k in {1,2,3}.
ScalarField z_apply(const ScalarField& f, int k);

/// Z^a with horizontal factors applied first, Z3 repetitions last.
ScalarField z_alpha(const ScalarField& f, const MultiIndex& a);

/// Discrete L^2 inner product: nodal horizontal quadrature x vertical trapezoid.
double inner(const ScalarField& f, const ScalarField& g);
double l2_norm_sq(const ScalarField& f);
double l2_norm(const ScalarField& f);
/// Volume integral with the same quadrature.
double integral(const ScalarField& f);

/// Grid max of |f|.
double linf(const ScalarField& f);

double sobolev_norm(const ScalarField& f, const NormRequest& req);

/// Negative-order horizontal operator |k_h|^{-s}, s in (0,1); the zero
/// horizontal mode is annihilated (callers report its magnitude separately).
ScalarField lambda_h_neg(const ScalarField& f, double s);
/// General power (used for +s round trips).
ScalarField lambda_h_pow(const ScalarField& f, double p);

/// Table of |Z^a f|_{L^2}^2 for all |a| <= max_order (tangential-only when
/// tan_only). Built depth-first so only one derivative chain is alive at once.
class JetNorms {
  public:
    JetNorms(const ScalarField& f, int max_order, bool tan_only = false);

    int max_order() const { return max_order_; }
    double at(const MultiIndex& a) const;

    /// sum over |a| <= m of |Z^a f|^2
    double co_sq(int m) const;
    /// tangential subset (a3 = 0)
    double tan_sq(int m) const;
    double dot_tan_sq(int m) const;
    double dot_co_sq(int m) const;
    /// |grad_h f|^2 in H^m_co, read as shifted entries (d_i Z^a = Z^{a+e_i}).
    /// Requires max_order >= m+1.
    double gradh_co_sq(int m) const;
    double gradh_tan_sq(int m) const;
    /// |grad_h grad_h f|^2 in H^m_tan; requires max_order >= m+2.
    double gradh2_tan_sq(int m) const;

  private:
    int max_order_;
    bool tan_only_;
    std::vector<double> sq_;  // indexed by flat multi-index id
};

/// Flat enumeration of multi-indices up to a fixed order.
int multi_index_id(const MultiIndex& a);
const std::vector<MultiIndex>& multi_indices_up_to(int order);

}  // namespace nslab
