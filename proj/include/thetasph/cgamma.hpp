#pragma once

#include "thetasph/types.hpp"

namespace thetasph::cgamma {

// Principal branch of log Gamma on C minus the nonpositive real axis.
// Lanczos approximation with reflection for Re z < 0.5.
Cplx log_gamma(Cplx z);

Cplx gamma(Cplx z);

// log Beta(a,b) = lgamma(a)+lgamma(b)-lgamma(a+b)
Cplx log_beta(Cplx a, Cplx b);
Cplx beta(Cplx a, Cplx b);

// True when z is within tol of a nonpositive integer (a Gamma pole).
bool is_gamma_pole(Cplx z, double tol = 1e-9);

// True when z is within tol of a nonpositive integer on the real axis,
// restricted to real-looking z.  Used for 2F1 parameter checks.
bool is_nonpositive_integer(Cplx z, double tol = 1e-9);

}  // namespace thetasph::cgamma
