#pragma once

#include <functional>

#include "thetasph/coeffs.hpp"
#include "thetasph/hcseries.hpp"
#include "thetasph/rootsys.hpp"

namespace thetasph::sph {

using coeffs::MultiplicityFunction;
using roots::RootSystem;
using roots::ThetaSet;

enum class EvalMethod { series, closed_form_complex, closed_form_rankone };
enum class Regularization { none, e_minus, n_minus };

struct ThetaSphericalValue {
  Cplx value{0.0, 0.0};
  EvalMethod method = EvalMethod::series;
  Regularization regularization = Regularization::none;
  double est_error = 0.0;
};

// phi_Theta(m; lam, a) = c_Theta^-(m;lam) sum_{w in W_Theta} c_Theta^+(m; wlam) Phi_{wlam}(m;a).
// Series evaluation on the open dominant chamber; on a_Theta \ a^+ only the
// m = 2 closed form evaluates (for Theta = Pi any chamber works through
// W-invariance).
ThetaSphericalValue theta_spherical(const RootSystem& rs, const MultiplicityFunction& m,
                                    const ThetaSet& th, const CVec& lam, const Vec& H, int N);

// Heckman-Opdam normalization: sum_{w in W} c(m; wlam) Phi_{wlam}(m;a); value 1 at H = 0.
ThetaSphericalValue hypergeometric_ho(const RootSystem& rs, const MultiplicityFunction& m,
                                      const CVec& lam, const Vec& H, int N);

// E_Theta(m; lam, a) = (c_Theta^- c_Theta^+ / c_Pi^+)(lam) phi_Pi(m; lam, a);
// for even m the prefactor collapses to (-1)^{d(Theta,m)}.
Cplx e_theta(const RootSystem& rs, const MultiplicityFunction& m, const ThetaSet& th,
             const CVec& lam, const Vec& H, int N);

// e_Theta^-(m;lam) phi_Theta(m;lam,a), computed with the prefactor folded into
// the sum so the value stays finite across the lambda poles of c_Theta^-.
Cplx regularized_theta(const RootSystem& rs, const MultiplicityFunction& m_even,
                       const ThetaSet& th, const CVec& lam, const Vec& H, int N);

// |L(m)f - (<lam,lam> - <rho,rho>) f| / (1 + |f|) by central differences,
// where L(m) = sum_i d(H_i)^2 + sum_{a>0} m_a coth(alpha(H)) d(A_alpha).
double radial_laplacian_residual(const RootSystem& rs, const MultiplicityFunction& m,
                                 const CVec& lam, const std::function<Cplx(const Vec&)>& f,
                                 const Vec& H, double h);

}  // namespace thetasph::sph
