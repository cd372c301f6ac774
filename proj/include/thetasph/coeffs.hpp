#pragma once

#include <string>
#include <vector>

#include "thetasph/rootsys.hpp"

namespace thetasph::coeffs {

using roots::RootSystem;
using roots::ThetaSet;

// W-invariant multiplicity function m: Sigma -> [0, inf).  Storage is keyed by
// W-orbit; for an irreducible reduced system the orbits are exactly the root
// length classes, so the key is <alpha,alpha>.
class MultiplicityFunction {
 public:
  // Same value on every root.
  static MultiplicityFunction constant(const RootSystem& rs, double m);
  // One value per length class, ascending order of <alpha,alpha>.
  static MultiplicityFunction by_orbit(const RootSystem& rs, const std::vector<double>& values);

  double operator()(const RootSystem& rs, const Vec& alpha) const;
  bool even() const;    // every value in 2*N0
  bool zero() const;
  // Constant value if the function is constant, else throws.
  double constant_value() const;
  const std::vector<std::pair<double, double>>& orbits() const { return orbit_values_; }
  std::string cache_key(const RootSystem& rs) const;

 private:
  std::vector<std::pair<double, double>> orbit_values_;  // (<alpha,alpha>, m_alpha)
};

struct CFunctionValue {
  Cplx value{0.0, 0.0};
  bool is_pole = false;
  int pole_order = 0;
};

// rho(m) = 1/2 sum_{alpha > 0} m_alpha alpha, in orthonormal coordinates.
Vec rho(const RootSystem& rs, const MultiplicityFunction& m);

// delta(m; exp H) = prod_{alpha > 0} |e^{alpha(H)} - e^{-alpha(H)}|^{m_alpha}
double delta_density(const RootSystem& rs, const MultiplicityFunction& m, const Vec& H);

// Weyl denominator Delta(exp H) = prod_{alpha > 0} (e^{alpha(H)} - e^{-alpha(H)})
Cplx weyl_denominator(const RootSystem& rs, const CVec& H);
double weyl_denominator(const RootSystem& rs, const Vec& H);

// pi(lam) = prod_{alpha > 0} lam_alpha
Cplx pi_poly(const RootSystem& rs, const CVec& lam);

// Harish-Chandra c-function by the Gindikin-Karpelevic product, normalized so
// that c(rho) = 1 (kappa0 cached per (rs, m)).  m = 0 gives c == 1.
CFunctionValue c_hc(const RootSystem& rs, const MultiplicityFunction& m, const CVec& lam);

// c_Theta^+ = prod_{alpha in <Theta>^+} Gamma(lam_a) / Gamma(lam_a + m_a/2)
// c_Theta^- = prod_{alpha in Sigma^+ \ <Theta>^+} Gamma(-lam_a - m_a/2 + 1) / Gamma(-lam_a + 1)
// Even multiplicities use the finite-product forms.
CFunctionValue c_theta_plus(const RootSystem& rs, const MultiplicityFunction& m,
                            const ThetaSet& th, const CVec& lam);
CFunctionValue c_theta_minus(const RootSystem& rs, const MultiplicityFunction& m,
                             const ThetaSet& th, const CVec& lam);

// Gamma-form variants, used to cross-check the finite-product fast path.
CFunctionValue c_theta_plus_gamma_form(const RootSystem& rs, const MultiplicityFunction& m,
                                       const ThetaSet& th, const CVec& lam);
CFunctionValue c_theta_minus_gamma_form(const RootSystem& rs, const MultiplicityFunction& m,
                                        const ThetaSet& th, const CVec& lam);

// n_Theta^- = prod_{alpha in Sigma^+ \ <Theta>^+} Gamma(-lam_a - m_a/2 + 1)
CFunctionValue n_theta_minus(const RootSystem& rs, const MultiplicityFunction& m,
                             const ThetaSet& th, const CVec& lam);

// e_Theta^- = prod_{complement} prod_{k=-m/2+1}^{m/2-1} (lam_a - k); m must be even.
Cplx e_theta_minus(const RootSystem& rs, const MultiplicityFunction& m, const ThetaSet& th,
                   const CVec& lam);
// e_Theta^+ carries the extra sign (-1)^{m |<Theta>^+| / 2}.
Cplx e_theta_plus(const RootSystem& rs, const MultiplicityFunction& m, const ThetaSet& th,
                  const CVec& lam);

// d(Theta, m) = 1/2 sum_{complement} m_alpha
double d_theta(const RootSystem& rs, const MultiplicityFunction& m, const ThetaSet& th);

// Beta-product form of Thm comega over Sigma^+ \ <Theta>^+, with kappa = 1:
// prod B(m_a/2, -lam_a - m_a/2 + 1).
CFunctionValue c_pi0_minus(const RootSystem& rs, const MultiplicityFunction& m,
                           const ThetaSet& th, const CVec& lam);

}  // namespace thetasph::coeffs
