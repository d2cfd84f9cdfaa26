#pragma once

#include "nslab/field.hpp"
#include "nslab/spectral.hpp"

namespace nslab {

/// Spectral horizontal derivative, axis in {1,2}.
ScalarField dh(const ScalarField& f, int axis);

/// 4th-order vertical derivative with the requested ghost extension.
/// Parity::None uses 4th-order biased stencils at the two rows next to each
/// wall. The result's parity flips (None stays None).
ScalarField dz(const ScalarField& f, Parity parity);
/// Uses the field's own parity tag.
ScalarField dz(const ScalarField& f);

/// Second vertical derivative as the composition dz(dz(f)); with parity ghosts
/// this keeps the discrete energy pairing <f, d33 f> = -|d3 f|^2 exact for
/// wall-compatible fields.
ScalarField dz2(const ScalarField& f);

/// Full gradient component: axis 1,2 spectral, 3 vertical.
ScalarField grad(const ScalarField& f, int axis);

struct VectorDerivatives {
    ScalarField div;                     // d1 u1 + d2 u2 + d3 u3
    ScalarField grad_div1, grad_div2, grad_div3;
    ScalarField lap_h1, lap_h2, lap_h3;  // horizontal Laplacian per component
    ScalarField curl_h1, curl_h2;        // (d2 u3 - d3 u2, d3 u1 - d1 u3)
};

VectorDerivatives vector_calculus(const ScalarField& u1, const ScalarField& u2,
                                  const ScalarField& u3);

ScalarField divergence(const ScalarField& u1, const ScalarField& u2, const ScalarField& u3);

/// Horizontal vorticity of a velocity field.
void curl_h(const ScalarField& u1, const ScalarField& u2, const ScalarField& u3,
            ScalarField& w1, ScalarField& w2);
/// Vertical vorticity d1 u2 - d2 u1.
ScalarField curl_3(const ScalarField& u1, const ScalarField& u2);

/// Slip wall: u3 = 0 on both walls exactly; u_h and rho untouched (the even
/// extension of u_h lives in the dz parity choice). Idempotent.
State apply_slip_bc(State s);

}  // namespace nslab
