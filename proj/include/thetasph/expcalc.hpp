#pragma once

#include "thetasph/rootsys.hpp"

namespace thetasph::expcalc {

using roots::RootSystem;
using roots::ThetaSet;

// Finite sum  (sum_i c_i e^{mu_i(H)}) / Delta(exp H)^k  with complex exponents
// mu_i in a*_C.  Terms are kept deduplicated and zero-pruned.
struct ExpSum {
  struct Term {
    Cplx coeff;
    CVec exponent;  // orthonormal coordinates
  };
  std::vector<Term> terms;
  int denom_power = 0;

  bool empty() const { return terms.empty(); }
};

ExpSum exp_term(const CVec& exponent, Cplx coeff = Cplx(1.0, 0.0));
ExpSum add(const ExpSum& a, const ExpSum& b);          // equal denom_power required
ExpSum scale(const ExpSum& a, Cplx c);
ExpSum mul(const ExpSum& a, const ExpSum& b);          // denom powers add
ExpSum normalized(ExpSum a);                            // dedupe + prune

// Numeric evaluation at H (divides by Delta(exp H)^denom_power).
Cplx eval(const RootSystem& rs, const ExpSum& es, const Vec& H);

// d_alpha with the normalization d_alpha e^{mu} = mu_alpha e^{mu}.
// Requires denom_power == 0.
ExpSum directional_derivative(const RootSystem& rs, const ExpSum& es, const Vec& alpha);

// Rank-one elementary shift operators in the variable z = alpha(H):
//   G_+(m) = -Delta(z)^{-1} d/dz                  (independent of m)
//   G_-(m) = Delta(z) d/dz + (m-1)(e^z + e^{-z})
// Exact on ExpSum, including denominator forms; exact Delta divisions are
// performed whenever the quotient stays an exponential polynomial.
ExpSum a1_g_plus(const RootSystem& rs, const ExpSum& es);
ExpSum a1_g_minus(const RootSystem& rs, double m, const ExpSum& es);

// Complex-case closed form at m = 2 on a_Theta, realizing
//   phi_Theta(2; lam, a) = (-1)^{d(Theta,2)} pi(lam)^{-2}
//       (prod_{alpha>0} d_alpha) (sum_{w in W_Theta} e^{w lam}) (H) / Delta(exp H).
// Agrees exactly with the defining series sum on A^+.
Cplx complex_theta_closed_form(const RootSystem& rs, const ThetaSet& th, const CVec& lam,
                               const Vec& H);

// The exponential-sum numerator of the formula above (before the Delta division).
ExpSum complex_theta_numerator(const RootSystem& rs, const ThetaSet& th, const CVec& lam);

}  // namespace thetasph::expcalc
