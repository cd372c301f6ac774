#include "thetasph/oracles.hpp"

#include <algorithm>
#include <cmath>

#include "thetasph/cgamma.hpp"

namespace thetasph::oracles {

namespace {

Cplx series_2f1(Cplx a, Cplx b, Cplx c, Cplx z) {
  Cplx term = 1.0, sum = 1.0;
  const int max_terms = 200000;
  int stable = 0;
  for (int n = 0; n < max_terms; ++n) {
    double dn = static_cast<double>(n);
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) {
      if (++stable >= 2) return sum;  // two consecutive negligible terms
    } else {
      stable = 0;
    }
    if (a + dn == 0.0 || b + dn == 0.0) return sum;  // terminating series
  }
  throw SingularEvaluation("gauss_2f1: series did not converge");
}

}  // namespace

Cplx gauss_2f1(const Hyper2F1Params& p) {
  if (cgamma::is_nonpositive_integer(p.c))
    throw PreconditionError("gauss_2f1: c is a nonpositive integer");
  const Cplx z = p.z;
  bool real_z = std::abs(z.imag()) < 1e-14;
  if (real_z && z.real() < 0.0) {
    // Pfaff: 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)); the image
    // argument lies in (0,1) for all z < 0.
    Cplx zp = z / (z - 1.0);
    return std::pow(1.0 - z, -p.a) * series_2f1(p.a, p.c - p.b, p.c, zp);
  }
  if (std::abs(z) <= 0.8) return series_2f1(p.a, p.b, p.c, z);
  if (real_z && z.real() > 0.0 && z.real() < 1.0) {
    // Arguments 1/cosh^2 t approach 1 as t -> 0; the raw series still
    // converges (slowly) on (0,1).
    return series_2f1(p.a, p.b, p.c, z);
  }
  throw PreconditionError("gauss_2f1: argument outside the supported domain");
}

Cplx gauss_2f1(Cplx a, Cplx b, Cplx c, Cplx z) { return gauss_2f1(Hyper2F1Params{a, b, c, z}); }

Cplx rankone_phi_riemannian(double m, Cplx lam, double t) {
  if (t < 0.0) throw PreconditionError("rankone_phi_riemannian: t must be >= 0");
  if (t == 0.0) return 1.0;
  double sh = std::sinh(t);
  return gauss_2f1((m + 2.0 * lam) / 4.0, (m - 2.0 * lam) / 4.0, (m + 1.0) / 2.0, -sh * sh);
}

Cplx rankone_phi_second_kind(double m, Cplx lam, double t) {
  if (t <= 0.0) throw PreconditionError("rankone_phi_second_kind: t must be > 0");
  double rho = m / 2.0;
  double sh = std::sinh(t);
  Cplx f = gauss_2f1((rho - lam) / 2.0, (-m / 2.0 + 1.0 - lam) / 2.0, 1.0 - lam,
                     -1.0 / (sh * sh));
  return std::pow(Cplx(2.0 * sh, 0.0), lam - rho) * f;
}

Cplx rankone_phi_ncc(double m, Cplx lam, double t) {
  if (t <= 0.0) throw PreconditionError("rankone_phi_ncc: t must be > 0");
  double rho = m / 2.0;
  Cplx cminus = cgamma::beta(Cplx(rho, 0.0), lam - rho + 1.0);
  if (!std::isfinite(cminus.real()) || !std::isfinite(cminus.imag()))
    throw SingularEvaluation("rankone_phi_ncc: Beta factor pole at this lambda");
  double ch = std::cosh(t);
  Cplx f = gauss_2f1((rho - lam) / 2.0, (rho - lam + 1.0) / 2.0, 1.0 - lam, 1.0 / (ch * ch));
  return cminus * std::pow(Cplx(2.0 * ch, 0.0), lam - rho) * f;
}

Cplx complex_case_phi(const RootSystem& rs, const CVec& lam, const Vec& H) {
  Cplx pi_lam = coeffs::pi_poly(rs, lam);
  if (std::abs(pi_lam) < 1e-12)
    throw SingularEvaluation("complex_case_phi: pi(lambda) ~ 0");
  double delta = coeffs::weyl_denominator(rs, H);
  if (std::abs(delta) < 1e-12)
    throw SingularEvaluation("complex_case_phi: H lies on a wall (Delta = 0)");
  auto mult2 = coeffs::MultiplicityFunction::constant(rs, 2.0);
  Cplx pi_rho = coeffs::pi_poly(rs, complexify(coeffs::rho(rs, mult2)));
  Cplx num = 0.0;
  for (const auto& w : roots::weyl_group(rs)) {
    CVec wl = w.apply(lam);
    num += static_cast<double>(w.det) * std::exp(cdot(wl, H));
  }
  return pi_rho / pi_lam * num / delta;
}

Cplx complex_case_ncc_phi(const RootSystem& rs, const ThetaSet& th, const CVec& lam,
                          const Vec& H) {
  auto comp = roots::complement_positive_indices(rs, th);
  Cplx cminus = 1.0;
  for (int p : comp) {
    Cplx la = roots::lambda_alpha(rs, lam, rs.positive_roots[p]);
    if (std::abs(la) < 1e-12)
      throw SingularEvaluation("complex_case_ncc_phi: c^- pole (lambda_alpha = 0)");
    cminus /= la;
  }
  Cplx theta_pi = 1.0;
  for (std::size_t p = 0; p < rs.positive_roots.size(); ++p) {
    if (std::find(comp.begin(), comp.end(), static_cast<int>(p)) != comp.end()) continue;
    theta_pi *= roots::lambda_alpha(rs, lam, rs.positive_roots[p]);
  }
  if (std::abs(theta_pi) < 1e-12)
    throw SingularEvaluation("complex_case_ncc_phi: lambda_alpha = 0 on <Theta>^+");
  double sinh_prod = 1.0;
  for (const auto& a : rs.positive_roots) sinh_prod *= std::sinh(dot(a, H));
  if (std::abs(sinh_prod) < 1e-300)
    throw SingularEvaluation("complex_case_ncc_phi: H lies on a wall");
  Cplx num = 0.0;
  for (const auto& w : roots::weyl_subgroup(rs, th)) {
    CVec wl = w.apply(lam);
    num += static_cast<double>(w.det) * std::exp(cdot(wl, H));
  }
  return cminus * num / (theta_pi * sinh_prod);
}

}  // namespace thetasph::oracles
