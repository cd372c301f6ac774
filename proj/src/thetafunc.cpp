#include "thetasph/thetafunc.hpp"

#include <algorithm>
#include <cmath>

#include "thetasph/expcalc.hpp"

namespace thetasph::sph {

namespace {

// c_Theta^- * sum_w c_Theta^+(w lam) Phi_{w lam} on the open dominant chamber.
ThetaSphericalValue series_path(const RootSystem& rs, const MultiplicityFunction& m,
                                const ThetaSet& th, const CVec& lam, const Vec& H, int N) {
  auto cm = coeffs::c_theta_minus(rs, m, th, lam);
  if (cm.is_pole)
    throw SingularEvaluation("theta_spherical: c_Theta^- pole at this lambda");
  ThetaSphericalValue out;
  out.method = EvalMethod::series;
  Cplx sum = 0.0;
  double err = 0.0;
  for (const auto& w : roots::weyl_subgroup(rs, th)) {
    CVec wl = w.apply(lam);
    auto cp = coeffs::c_theta_plus(rs, m, th, wl);
    if (cp.is_pole)
      throw SingularEvaluation("theta_spherical: c_Theta^+ pole at w*lambda");
    auto phi = series::phi_hc(rs, m, wl, H, N);
    sum += cp.value * phi.value;
    err += std::abs(cp.value) * phi.tail_bound;
  }
  out.value = cm.value * sum;
  out.est_error = std::abs(cm.value) * err;
  return out;
}

bool is_constant_two(const MultiplicityFunction& m) {
  for (const auto& [n2, v] : m.orbits()) {
    (void)n2;
    if (std::abs(v - 2.0) > 1e-12) return false;
  }
  return true;
}

}  // namespace

ThetaSphericalValue theta_spherical(const RootSystem& rs, const MultiplicityFunction& m,
                                    const ThetaSet& th, const CVec& lam, const Vec& H, int N) {
  if (roots::is_dominant(rs, H)) return series_path(rs, m, th, lam, H, N);

  if (th.is_full(rs.rank)) {
    // phi_Pi is W-invariant in a; evaluate at the dominant representative.
    auto [Hdom, det] = roots::to_dominant(rs, H);
    (void)det;
    if (!roots::is_dominant(rs, Hdom))
      throw SingularEvaluation("theta_spherical: H lies on a wall");
    return series_path(rs, m, th, lam, Hdom, N);
  }

  if (!roots::a_theta_contains(rs, th, H))
    throw PreconditionError("theta_spherical: H outside a_Theta");

  if (is_constant_two(m)) {
    ThetaSphericalValue out;
    out.method = EvalMethod::closed_form_complex;
    out.value = expcalc::complex_theta_closed_form(rs, th, lam, H);
    out.est_error = 64.0 * 1e-16 * std::abs(out.value);
    return out;
  }
  throw PreconditionError(
      "theta_spherical: H in a_Theta \\ a^+ requires the m = 2 closed form; no evaluation path "
      "for this multiplicity");
}

ThetaSphericalValue hypergeometric_ho(const RootSystem& rs, const MultiplicityFunction& m,
                                      const CVec& lam, const Vec& H, int N) {
  auto [Hdom, det] = roots::to_dominant(rs, H);
  (void)det;
  if (!roots::is_dominant(rs, Hdom))
    throw SingularEvaluation("hypergeometric_ho: H lies on a wall");
  ThetaSphericalValue out;
  out.method = EvalMethod::series;
  Cplx sum = 0.0;
  double err = 0.0;
  for (const auto& w : roots::weyl_group(rs)) {
    CVec wl = w.apply(lam);
    auto c = coeffs::c_hc(rs, m, wl);
    if (c.is_pole) throw SingularEvaluation("hypergeometric_ho: c-function pole at w*lambda");
    auto phi = series::phi_hc(rs, m, wl, Hdom, N);
    sum += c.value * phi.value;
    err += std::abs(c.value) * phi.tail_bound;
  }
  out.value = sum;
  out.est_error = err;
  return out;
}

Cplx e_theta(const RootSystem& rs, const MultiplicityFunction& m, const ThetaSet& th,
             const CVec& lam, const Vec& H, int N) {
  Cplx prefactor;
  if (m.even()) {
    double d = coeffs::d_theta(rs, m, th);
    prefactor = (std::llround(d) % 2 == 0) ? 1.0 : -1.0;
  } else {
    auto cm = coeffs::c_theta_minus(rs, m, th, lam);
    auto cp = coeffs::c_theta_plus(rs, m, th, lam);
    auto cpi = coeffs::c_theta_plus(rs, m, ThetaSet::full(rs.rank), lam);
    if (cm.is_pole || cp.is_pole)
      throw SingularEvaluation("e_theta: prefactor pole at this lambda");
    if (std::abs(cpi.value) == 0.0 || cpi.is_pole)
      throw SingularEvaluation("e_theta: c_Pi^+ vanishes or is singular at this lambda");
    prefactor = cm.value * cp.value / cpi.value;
  }
  auto phi = theta_spherical(rs, m, ThetaSet::full(rs.rank), lam, H, N);
  return prefactor * phi.value;
}

Cplx regularized_theta(const RootSystem& rs, const MultiplicityFunction& m, const ThetaSet& th,
                       const CVec& lam, const Vec& H, int N) {
  if (!m.even()) throw PreconditionError("regularized_theta requires an even multiplicity");

  // e_Theta^- c_Theta^- collapses to the polynomial
  //   (-1)^{d(Theta,m)} prod_{complement} prod_{k=1}^{m_a/2-1} (lam_a - k),
  // which stays finite across the poles of c_Theta^-.
  auto comp = roots::complement_positive_indices(rs, th);
  Cplx poly = 1.0;
  for (int p : comp) {
    const Vec& a = rs.positive_roots[p];
    long half = std::llround(m(rs, a) / 2.0);
    Cplx la = roots::lambda_alpha(rs, lam, a);
    for (long k = 1; k <= half - 1; ++k) poly *= la - static_cast<double>(k);
  }
  double d = coeffs::d_theta(rs, m, th);
  if (std::llround(d) % 2 != 0) poly = -poly;

  if (roots::is_dominant(rs, H)) {
    Cplx sum = 0.0;
    for (const auto& w : roots::weyl_subgroup(rs, th)) {
      CVec wl = w.apply(lam);
      auto cp = coeffs::c_theta_plus(rs, m, th, wl);
      if (cp.is_pole) throw SingularEvaluation("regularized_theta: c_Theta^+ pole at w*lambda");
      sum += cp.value * series::phi_hc(rs, m, wl, H, N).value;
    }
    return poly * sum;
  }
  if (!roots::a_theta_contains(rs, th, H) && !th.is_full(rs.rank))
    throw PreconditionError("regularized_theta: H outside a_Theta");
  if (is_constant_two(m)) {
    // e^-(2) phi_Theta(2) = (-1)^d sum_{W_Theta} det(w) e^{w lam (H)} / (pi_Theta(lam) Delta).
    Cplx num = 0.0;
    for (const auto& w : roots::weyl_subgroup(rs, th))
      num += static_cast<double>(w.det) * std::exp(cdot(w.apply(lam), H));
    Cplx pi_theta = 1.0;
    for (std::size_t p = 0; p < rs.positive_roots.size(); ++p) {
      bool in_comp = std::find(comp.begin(), comp.end(), static_cast<int>(p)) != comp.end();
      if (!in_comp) pi_theta *= roots::lambda_alpha(rs, lam, rs.positive_roots[p]);
    }
    Cplx delta = coeffs::weyl_denominator(rs, complexify(H));
    if (std::abs(delta) < 1e-12 || std::abs(pi_theta) < 1e-12)
      throw SingularEvaluation("regularized_theta: wall or pi_Theta zero");
    double sign = (std::llround(d) % 2 == 0) ? 1.0 : -1.0;
    return sign * num / (pi_theta * delta);
  }
  throw PreconditionError("regularized_theta: no evaluation path off the dominant chamber");
}

double radial_laplacian_residual(const RootSystem& rs, const MultiplicityFunction& m,
                                 const CVec& lam, const std::function<Cplx(const Vec&)>& f,
                                 const Vec& H, double h) {
  for (const auto& a : rs.simple_roots) {
    double margin = dot(a, H);
    if (margin <= 3.0 * h * std::sqrt(rs.inner(a, a)))
      throw PreconditionError("radial_laplacian_residual: step too large for the chamber margin");
  }
  Cplx f0 = f(H);
  Cplx lap = 0.0;
  for (int i = 0; i < rs.rank; ++i) {
    Vec hp(H), hm(H);
    hp[i] += h;
    hm[i] -= h;
    lap += (f(hp) - 2.0 * f0 + f(hm)) / (h * h);
  }
  for (const auto& a : rs.positive_roots) {
    double ma = m(rs, a);
    if (ma == 0.0) continue;
    double x = dot(a, H);
    Vec hp(H), hm(H);
    for (int i = 0; i < rs.rank; ++i) {
      hp[i] += h * a[i];
      hm[i] -= h * a[i];
    }
    lap += ma / std::tanh(x) * (f(hp) - f(hm)) / (2.0 * h);
  }
  Vec rho_vec = coeffs::rho(rs, m);
  Cplx eig = rs.inner(lam, lam) - rs.inner(rho_vec, rho_vec);
  return std::abs(lap - eig * f0) / (1.0 + std::abs(f0));
}

}  // namespace thetasph::sph
