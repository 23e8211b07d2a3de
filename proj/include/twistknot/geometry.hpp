#pragma once

// Independent hyperbolic-geometry channel: solve the gluing equation for the
// shape parameter w0, assemble vol + i*cs from dilogarithm R-terms, and
// cross-check 2 pi zeta(p) = vol + i*cs - (p+5) pi^2 i against the
// critical-point channel.

#include "twistknot/critical.hpp"

namespace twistknot {

struct GluingSolution {
  Complex w0;     // gluing-equation root; equals e^{-pi i s0}
  Complex volcs;  // vol + i*cs, imaginary part reduced mod pi^2 to (-pi^2/2, pi^2/2]
};

// log(-1/w) under the side condition log w + log(-1/w) = -pi i,
// i.e. -pi i - log w (principal log w). Coincides with the principal value
// in the neighbourhood of the geometric root. Used throughout this module.
Complex log_minus_inv(Complex w);

// Left-hand side of the gluing equation minus its right-hand side:
//   -log(w-1) + 2(2p-1) log(-1/w) + log(-1/w - 1) - (3-2p) pi i,
// which vanishes exactly at w0 = e^{-pi i s0} with the log branches above.
Complex gluing_residual(int p, Complex w);

// Newton solve of the gluing equation seeded at e^{-pi i s0} from the
// critical channel (p >= 6); verifies the root matches the seed and fills
// volcs.
GluingSolution solve_gluing(int p, const NumericsConfig& cfg = NumericsConfig());

// vol + i*cs from a gluing root:
//   i (R(w0) + R(-1/w0) + R(1/(1-w0)) + R(w0/(w0+1)))
//   - (pi/2) (2 pi i + 2 pi i/p + (log(w0-1) + 2 log(-1/w0)
//                                  - log(-1/w0 - 1) + pi i)/p),
// R(U) = (1/2) log U log(1-U) + Li2(U); imaginary part reduced mod pi^2.
Complex vol_cs_from_w(int p, Complex w0);

// The two closed-form expressions whose equality underlies the volume
// identity, with the twist parameter eliminated through the gluing equation
// (F) and through the critical equations (G). Both equal
// 2 pi (zeta(p) + (p+7)/2 pi i) at the geometric root.
Complex F_of_w(Complex w0);
Complex G_of_w(Complex w0);

}  // namespace twistknot
