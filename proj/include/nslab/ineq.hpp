#pragma once

#include <stdexcept>

#include "nslab/analytic.hpp"
#include "nslab/conormal.hpp"

namespace nslab {

/// Anisotropic Sobolev-type inequalities exercised by the property bench.
enum class InequalityId {
    AnisoLinf,        // item 1: |f|_inf against the eight-factor product
    TripleProduct,    // item 2: integral |f g h|, 1-2-4 split
    TripleSplit,      // item 3: integral |f g h|, one axis per factor
    Z3InterpCubic,    // item 4: |Z3 f| <= |f|^{2/3} |(f, Z3^3 f)|^{1/3}
    Z3InterpQuartic,  // item 5: |Z3 f| <= |f|^{3/4} |(f, Z3^4 f)|^{1/4}
    MixedLinfLp,      // item 6: mixed L^{2/s} horizontal norm of the vertical sup
    Z3TwoTerm,        // |Z3 f| <= |f| + |f|^{1/2} |Z3^2 f|^{1/2}
    NegOrderLp,       // Hardy-Littlewood-Sobolev for the horizontal multiplier
};

const char* inequality_name(InequalityId id);

struct DegenerateRhs : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RatioParams {
    double s = 33.0 / 34.0;  // item 6 exponent, in (1/2, 1)
    double alpha = 0.5;      // negative order, in (0, 1)
    int nx = 32, ny = 32, nz = 192;
};

struct RatioReport {
    InequalityId id;
    double lhs = 0, rhs = 0, ratio = 0;
    std::uint64_t seed = 0;
};

/// Single-field inequalities (1, 4, 5, 6, a10, a16).
RatioReport ratio(const TestField& f, InequalityId id, const RatioParams& prm = {});
/// Triple-product inequalities (2, 3).
RatioReport ratio(const TestField& f, const TestField& g, const TestField& h, InequalityId id,
                  const RatioParams& prm = {});

/// |ratio(f_lam) - ratio(f)| for the fully scale-balanced item 1.
double scaling_invariance(const TestField& f, InequalityId id, double lam1, double lam2,
                          double lam3, const RatioParams& prm = {});

/// Deterministic corpus ratios (degenerate draws are resampled).
std::vector<RatioReport> ratio_corpus(InequalityId id, int n, std::uint64_t seed,
                                      const RatioParams& prm = {});

}  // namespace nslab
