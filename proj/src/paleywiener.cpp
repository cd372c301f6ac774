#include "thetasph/paleywiener.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace thetasph::pw {

namespace {

// slope of y against x by least squares
double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Least-squares fit of y ~= q s + c1 sqrt(s) + c2 log(1+s) + c3; returns q.
// The sqrt and log corrections absorb the saddle-point and polynomial factors
// that otherwise bias the exponential-type slope at moderate radii.
double ls_exp_slope(const std::vector<double>& s, const std::vector<double>& y) {
  const int k = 4;
  double ata[16] = {0};
  double atb[4] = {0};
  for (std::size_t i = 0; i < s.size(); ++i) {
    double row[4] = {s[i], std::sqrt(s[i]), std::log1p(s[i]), 1.0};
    for (int a = 0; a < k; ++a) {
      atb[a] += row[a] * y[i];
      for (int b = 0; b < k; ++b) ata[a * k + b] += row[a] * row[b];
    }
  }
  // solve the 4x4 normal equations by Gaussian elimination
  double m[4][5];
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) m[a][b] = ata[a * k + b];
    m[a][4] = atb[a];
  }
  for (int col = 0; col < k; ++col) {
    int piv = col;
    for (int r = col + 1; r < k; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    std::swap(m[col], m[piv]);
    for (int r = 0; r < k; ++r) {
      if (r == col) continue;
      double f = m[r][col] / m[col][col];
      for (int c = col; c <= k; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return m[0][4] / m[0][0];
}

CVec scaled_dir(const Vec& dir, Cplx s) {
  CVec out(dir.size());
  for (std::size_t i = 0; i < dir.size(); ++i) out[i] = s * dir[i];
  return out;
}

}  // namespace

ConvexBody ConvexBody::ball(double R) {
  ConvexBody c;
  c.kind = Kind::ball;
  c.radius = R;
  return c;
}

ConvexBody ConvexBody::hull(std::vector<Vec> generators) {
  ConvexBody c;
  c.kind = Kind::hull;
  c.generators = std::move(generators);
  return c;
}

double support_function(const ConvexBody& C, const Vec& xi) {
  if (C.kind == ConvexBody::Kind::ball) return C.radius * std::sqrt(norm2(xi));
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& g : C.generators) best = std::max(best, dot(xi, g));
  return best;
}

std::vector<RayEstimate> exponential_type_estimate(const RootSystem& rs,
                                                   const MultiplicityFunction& m,
                                                   const ThetaSet& th, const SpectralFn& g,
                                                   const std::vector<Vec>& directions,
                                                   const std::vector<double>& radii,
                                                   const ConvexBody* C) {
  std::vector<RayEstimate> out;
  for (const auto& dir : directions) {
    RayEstimate est;
    est.direction = dir;
    if (C) est.q_C = support_function(*C, dir);
    std::vector<double> xs, ys;
    for (double s : radii) {
      CVec lam = scaled_dir(dir, Cplx(s, 0.0));
      Cplx eminus = m.even() ? coeffs::e_theta_minus(rs, m, th, lam) : Cplx(1.0, 0.0);
      Cplx val;
      try {
        val = g(lam);
      } catch (const SingularEvaluation&) {
        continue;  // ray sample on a singular hyperplane of the evaluator
      }
      double mag = std::abs(eminus) * std::abs(val);
      if (mag <= 0.0 || !std::isfinite(mag)) continue;
      xs.push_back(s);
      ys.push_back(std::log(mag));
      est.radii.push_back(s);
      est.log_values.push_back(std::log(mag));
    }
    est.slope = xs.size() >= 5 ? ls_exp_slope(xs, ys) : (xs.size() >= 2 ? ls_slope(xs, ys) : 0.0);
    out.push_back(std::move(est));
  }
  return out;
}

std::vector<DecayEstimate> rapid_decrease_estimate(const RootSystem& rs,
                                                   const MultiplicityFunction& m,
                                                   const ThetaSet& th, const SpectralFn& g,
                                                   const std::vector<Vec>& directions,
                                                   const std::vector<double>& radii,
                                                   int max_order) {
  std::vector<DecayEstimate> out;
  for (const auto& dir : directions) {
    DecayEstimate d;
    d.direction = dir;
    std::vector<double> xs, logmag;
    for (double s : radii) {
      CVec lam = scaled_dir(dir, Cplx(0.0, s));  // imaginary ray
      Cplx eminus = m.even() ? coeffs::e_theta_minus(rs, m, th, lam) : Cplx(1.0, 0.0);
      double mag;
      try {
        mag = std::abs(eminus) * std::abs(g(lam));
      } catch (const SingularEvaluation&) {
        continue;
      }
      if (mag <= 0.0 || !std::isfinite(mag)) continue;
      xs.push_back(std::log1p(s));
      logmag.push_back(std::log(mag));
    }
    int order = 0;
    for (int N = 1; N <= max_order; ++N) {
      std::vector<double> ys(logmag);
      for (std::size_t i = 0; i < ys.size(); ++i) ys[i] += N * xs[i];
      if (xs.size() >= 2 && ls_slope(xs, ys) <= 0.0) order = N;
    }
    d.order = order;
    out.push_back(std::move(d));
  }
  return out;
}

Cplx p_average(const RootSystem& rs, const Parabolic& par, const SpectralFn& g, const CVec& lam,
               bool* perturbed) {
  (void)rs;
  if (perturbed) *perturbed = false;
  Cplx sum = 0.0;
  for (const auto& w : par.coset_reps) {
    CVec wl = w.apply(lam);
    Cplx v = g(wl);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      CVec nudged(wl);
      for (auto& x : nudged) x += Cplx(1e-9, 1e-9);
      v = g(nudged);
      if (perturbed) *perturbed = true;
    }
    sum += v;
  }
  return sum;
}

std::vector<HyperplaneResidual> pav_entirety_test(const RootSystem& rs,
                                                  const MultiplicityFunction& m,
                                                  const ThetaSet& th, const SpectralFn& g,
                                                  int ladder_depth) {
  if (!m.even()) throw PreconditionError("pav_entirety_test requires an even multiplicity");
  auto par = roots::parabolic(rs, th);
  std::vector<HyperplaneResidual> out;
  for (int p : par.complement_positive) {
    const Vec& alpha = rs.positive_roots[p];
    long half = std::llround(m(rs, alpha) / 2.0);
    double a2 = rs.inner(alpha, alpha);
    // Transversal direction: lambda_alpha(c * alpha) = c, so stepping by
    // eps * alpha moves lambda_alpha by eps.
    const Vec& step = alpha;
    // Deterministic imaginary offset orthogonal to alpha, so the base point
    // satisfies lambda_alpha = k exactly (rank one has no such direction and
    // uses a purely real base).
    Vec tau(rs.rank, 0.0);
    for (int i = 0; i < rs.rank; ++i) tau[i] = 0.31 + 0.17 * static_cast<double>(i + 1);
    double proj = dot(tau, alpha) / a2;
    for (int i = 0; i < rs.rank; ++i) tau[i] -= proj * alpha[i];
    if (rs.rank == 1) tau[0] = 0.0;
    for (long k = -half + 1; k <= half - 1; ++k) {
      CVec base(rs.rank);
      for (int i = 0; i < rs.rank; ++i)
        base[i] = Cplx(static_cast<double>(k) * alpha[i], tau[i]);
      // Odd-part fit: odd(eps) = c_{-1}/eps + c_1 eps  (least squares over ladder)
      std::vector<double> eps_list;
      for (int d = 1; d <= ladder_depth; ++d) eps_list.push_back(std::pow(10.0, -d));
      double s11 = 0, s12 = 0, s22 = 0;
      Cplx b1 = 0, b2 = 0;
      std::vector<double> mags;
      for (double eps : eps_list) {
        CVec lp(base), lm(base);
        for (int i = 0; i < rs.rank; ++i) {
          lp[i] += eps * step[i];
          lm[i] -= eps * step[i];
        }
        Cplx vp = p_average(rs, par, g, lp);
        Cplx vm = p_average(rs, par, g, lm);
        Cplx odd = 0.5 * (vp - vm);
        mags.push_back(std::max(std::abs(vp), std::abs(vm)));
        double x1 = 1.0 / eps, x2 = eps;
        s11 += x1 * x1;
        s12 += x1 * x2;
        s22 += x2 * x2;
        b1 += odd * x1;
        b2 += odd * x2;
      }
      double det = s11 * s22 - s12 * s12;
      Cplx c_minus1 = (b1 * s22 - b2 * s12) / det;
      // median magnitude over the ladder: stable for entire averages, far
      // below the pole blow-up scale for genuine first-order poles
      std::sort(mags.begin(), mags.end());
      double scale = mags[mags.size() / 2];
      HyperplaneResidual hr;
      hr.positive_root_index = p;
      hr.k = static_cast<int>(k);
      hr.residual = std::abs(c_minus1) / std::max(scale, 1e-12);
      out.push_back(hr);
    }
  }
  return out;
}

PWReport pw_report(const RootSystem& rs, const MultiplicityFunction& m, const ThetaSet& th,
                   const SpectralFn& g, const ConvexBody& C, const std::vector<Vec>& directions,
                   const std::vector<double>& radii, double rel_tol, double pav_tol,
                   int min_decay) {
  PWReport rep;
  rep.exp_type_estimates = exponential_type_estimate(rs, m, th, g, directions, radii, &C);
  rep.decay_orders = rapid_decrease_estimate(rs, m, th, g, directions, radii);
  rep.pav_residuals = pav_entirety_test(rs, m, th, g);

  rep.exp_type_margin = 0.0;
  for (const auto& e : rep.exp_type_estimates)
    rep.exp_type_margin =
        std::max(rep.exp_type_margin, std::abs(e.slope - e.q_C) / std::max(std::abs(e.q_C), 0.1));
  rep.min_decay_order = rep.decay_orders.empty() ? 0 : rep.decay_orders.front().order;
  for (const auto& d : rep.decay_orders) rep.min_decay_order = std::min(rep.min_decay_order, d.order);
  rep.pav_max_residual = 0.0;
  for (const auto& h : rep.pav_residuals)
    rep.pav_max_residual = std::max(rep.pav_max_residual, h.residual);
  rep.pass = rep.exp_type_margin <= rel_tol && rep.min_decay_order >= min_decay &&
             rep.pav_max_residual <= pav_tol;
  return rep;
}

}  // namespace thetasph::pw
