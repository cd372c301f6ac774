#pragma once

#include "thetasph/coeffs.hpp"
#include "thetasph/rootsys.hpp"

namespace thetasph::oracles {

using coeffs::MultiplicityFunction;
using roots::RootSystem;
using roots::ThetaSet;

struct Hyper2F1Params {
  Cplx a, b, c;
  Cplx z;
};

// Gauss 2F1.  Raw series for |z| <= 0.8; Pfaff transformation
// z -> z/(z-1) for real z < 0; other arguments are out of the supported
// domain and throw.  Throws when c is a nonpositive integer.
Cplx gauss_2f1(const Hyper2F1Params& p);
Cplx gauss_2f1(Cplx a, Cplx b, Cplx c, Cplx z);

// Jacobi function of first kind in the paper's normalization (value 1 at t=0):
// 2F1((m+2lam)/4, (m-2lam)/4; (m+1)/2; -sinh^2 t).   (m_{2a} = 0 throughout.)
Cplx rankone_phi_riemannian(double m_alpha, Cplx lam_alpha, double t);

// Second-kind solution Phi_lam(m;t) = (2 sinh t)^{lam-rho}
//   2F1((rho-lam)/2, (-m/2+1-lam)/2; 1-lam; -1/sinh^2 t),  rho = m/2.
Cplx rankone_phi_second_kind(double m_alpha, Cplx lam_alpha, double t);

// Rank-one NCC spherical function, kappa = 1 convention:
//   c^-(lam) (2 cosh t)^{lam-rho} 2F1((rho-lam)/2, (rho-lam+1)/2; 1-lam; 1/cosh^2 t)
// with c^-(lam) = B(rho, lam - rho + 1).  The hypergeometric factor equals
// Phi_lam(m;t) exactly (Pfaff transform of the second-kind form).
Cplx rankone_phi_ncc(double m_alpha, Cplx lam_alpha, double t);

// Complex-case closed form (m = 2):
//   phi_lam(a) = (pi(rho)/pi(lam)) sum_w det(w) a^{w lam} / Delta(a)
Cplx complex_case_phi(const RootSystem& rs, const CVec& lam, const Vec& H);

// Complex-case NCC closed form (m = 2, kappa1 = kappa2 = 1):
//   c^-(lam) sum_{w in W_Theta} det(w) e^{w lam (H)} /
//     ( prod_{<Theta>^+} lam_a * prod_{Sigma^+} sinh(alpha(H)) ),
//   c^-(lam) = prod_{complement} lam_a^{-1}.
Cplx complex_case_ncc_phi(const RootSystem& rs, const ThetaSet& th, const CVec& lam, const Vec& H);

}  // namespace thetasph::oracles
