#include "thetasph/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "thetasph/cgamma.hpp"

namespace thetasph::coeffs {

namespace {

constexpr double kPoleTol = 1e-9;

bool near_integer(double x, double tol = 1e-9) { return std::abs(x - std::round(x)) <= tol; }

// One Gindikin-Karpelevic factor (reduced system, so m_{2a} = 0):
//   2^{-x} Gamma(x) / ( Gamma((x + m/2 + 1)/2) Gamma((x + m/2)/2) ),  x = lam_alpha.
struct GammaProductAccumulator {
  Cplx log_value{0.0, 0.0};
  int pole_order = 0;   // poles from numerator Gammas
  int zero_order = 0;   // poles from denominator Gammas

  void mul_gamma(Cplx arg) {
    if (cgamma::is_gamma_pole(arg, kPoleTol)) { ++pole_order; return; }
    log_value += cgamma::log_gamma(arg);
  }
  void div_gamma(Cplx arg) {
    if (cgamma::is_gamma_pole(arg, kPoleTol)) { ++zero_order; return; }
    log_value -= cgamma::log_gamma(arg);
  }
  void mul_plain(Cplx v) { log_value += std::log(v); }

  CFunctionValue finish() const {
    CFunctionValue out;
    int net = pole_order - zero_order;
    if (net > 0) {
      out.is_pole = true;
      out.pole_order = net;
      out.value = Cplx(std::nan(""), std::nan(""));
    } else if (net < 0) {
      out.value = 0.0;
    } else if (pole_order > 0) {
      // Pole against zero of the same order: finite nonzero limit exists but we
      // do not compute it here; callers that need the limit evaluate nearby.
      out.is_pole = true;
      out.pole_order = 0;
      out.value = Cplx(std::nan(""), std::nan(""));
    } else {
      out.value = std::exp(log_value);
    }
    return out;
  }
};

std::mutex g_kappa0_mutex;
std::map<std::string, double> g_kappa0_cache;

}  // namespace

MultiplicityFunction MultiplicityFunction::constant(const RootSystem& rs, double m) {
  if (m < 0.0) throw PreconditionError("multiplicities must be nonnegative");
  MultiplicityFunction f;
  std::vector<double> norms;
  for (const auto& a : rs.positive_roots) {
    double n2 = rs.inner(a, a);
    bool seen = false;
    for (double x : norms) seen = seen || std::abs(x - n2) < 1e-9;
    if (!seen) norms.push_back(n2);
  }
  std::sort(norms.begin(), norms.end());
  for (double n2 : norms) f.orbit_values_.emplace_back(n2, m);
  return f;
}

MultiplicityFunction MultiplicityFunction::by_orbit(const RootSystem& rs,
                                                    const std::vector<double>& values) {
  MultiplicityFunction f = constant(rs, 0.0);
  if (values.size() != f.orbit_values_.size())
    throw PreconditionError("by_orbit: expected one multiplicity per root length class (" +
                            std::to_string(f.orbit_values_.size()) + ")");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0.0) throw PreconditionError("multiplicities must be nonnegative");
    f.orbit_values_[i].second = values[i];
  }
  return f;
}

double MultiplicityFunction::operator()(const RootSystem& rs, const Vec& alpha) const {
  double n2 = rs.inner(alpha, alpha);
  for (const auto& [key, val] : orbit_values_)
    if (std::abs(key - n2) < 1e-9) return val;
  throw PreconditionError("multiplicity lookup: vector is not a root of this system");
}

bool MultiplicityFunction::even() const {
  for (const auto& [key, val] : orbit_values_) {
    (void)key;
    if (!near_integer(val) || std::llround(val) % 2 != 0) return false;
  }
  return true;
}

bool MultiplicityFunction::zero() const {
  for (const auto& [key, val] : orbit_values_) {
    (void)key;
    if (val != 0.0) return false;
  }
  return true;
}

double MultiplicityFunction::constant_value() const {
  double v = orbit_values_.front().second;
  for (const auto& [key, val] : orbit_values_) {
    (void)key;
    if (std::abs(val - v) > 1e-12)
      throw PreconditionError("multiplicity function is not constant");
  }
  return v;
}

std::string MultiplicityFunction::cache_key(const RootSystem& rs) const {
  std::ostringstream os;
  os << rs.label();
  for (const auto& [n2, v] : orbit_values_) os << "|" << n2 << ":" << v;
  return os.str();
}

Vec rho(const RootSystem& rs, const MultiplicityFunction& m) {
  Vec out(rs.rank, 0.0);
  for (const auto& a : rs.positive_roots) {
    double ma = m(rs, a);
    for (int i = 0; i < rs.rank; ++i) out[i] += 0.5 * ma * a[i];
  }
  return out;
}

double delta_density(const RootSystem& rs, const MultiplicityFunction& m, const Vec& H) {
  double out = 1.0;
  for (const auto& a : rs.positive_roots) {
    double x = dot(a, H);
    out *= std::pow(std::abs(2.0 * std::sinh(x)), m(rs, a));
  }
  return out;
}

Cplx weyl_denominator(const RootSystem& rs, const CVec& H) {
  Cplx out = 1.0;
  for (const auto& a : rs.positive_roots) {
    Cplx x = cdot(complexify(a), H);
    out *= std::exp(x) - std::exp(-x);
  }
  return out;
}

double weyl_denominator(const RootSystem& rs, const Vec& H) {
  double out = 1.0;
  for (const auto& a : rs.positive_roots) out *= 2.0 * std::sinh(dot(a, H));
  return out;
}

Cplx pi_poly(const RootSystem& rs, const CVec& lam) {
  Cplx out = 1.0;
  for (const auto& a : rs.positive_roots) out *= roots::lambda_alpha(rs, lam, a);
  return out;
}

namespace {

// Unnormalized GK product; finite value only (pole bookkeeping via accumulator).
GammaProductAccumulator gk_product(const RootSystem& rs, const MultiplicityFunction& m,
                                   const CVec& lam) {
  GammaProductAccumulator acc;
  for (const auto& a : rs.positive_roots) {   // Sigma reduced: all roots indivisible
    Cplx x = roots::lambda_alpha(rs, lam, a);
    double ma = m(rs, a);
    acc.mul_plain(std::exp(-x * std::log(2.0)));
    acc.mul_gamma(x);
    acc.div_gamma(0.5 * (x + ma / 2.0 + 1.0));
    acc.div_gamma(0.5 * (x + ma / 2.0));
  }
  return acc;
}

double kappa0_for(const RootSystem& rs, const MultiplicityFunction& m) {
  const std::string key = m.cache_key(rs);
  {
    std::lock_guard<std::mutex> lock(g_kappa0_mutex);
    auto it = g_kappa0_cache.find(key);
    if (it != g_kappa0_cache.end()) return it->second;
  }
  CVec rho_c = complexify(rho(rs, m));
  auto at_rho = gk_product(rs, m, rho_c).finish();
  if (at_rho.is_pole || std::abs(at_rho.value) == 0.0)
    throw SingularEvaluation("GK product singular at rho; cannot normalize c(rho)=1");
  double k0 = 1.0 / at_rho.value.real();
  std::lock_guard<std::mutex> lock(g_kappa0_mutex);
  g_kappa0_cache.emplace(key, k0);
  return k0;
}

}  // namespace

CFunctionValue c_hc(const RootSystem& rs, const MultiplicityFunction& m, const CVec& lam) {
  if (m.zero()) return CFunctionValue{Cplx(1.0, 0.0), false, 0};
  double k0 = kappa0_for(rs, m);
  auto acc = gk_product(rs, m, lam);
  auto out = acc.finish();
  if (!out.is_pole) out.value *= k0;
  return out;
}

namespace {

CFunctionValue even_ratio_product(const RootSystem& rs, const MultiplicityFunction& m,
                                  const std::vector<int>& pos_indices, const CVec& lam,
                                  bool minus_form) {
  // minus form: (-1)^{sum m_a/2} prod_a prod_{h=0}^{m_a/2-1} 1/(lam_a + h)
  // plus form:                    prod_a prod_{h=0}^{m_a/2-1} 1/(lam_a + h)
  CFunctionValue out;
  out.value = 1.0;
  long sign_exp = 0;
  for (int p : pos_indices) {
    const Vec& a = rs.positive_roots[p];
    long half = std::llround(m(rs, a) / 2.0);
    Cplx x = roots::lambda_alpha(rs, lam, a);
    sign_exp += half;
    for (long h = 0; h < half; ++h) {
      Cplx f = x + static_cast<double>(h);
      if (std::abs(f) < kPoleTol) {
        ++out.pole_order;
        continue;
      }
      out.value /= f;
    }
  }
  if (out.pole_order > 0) {
    out.is_pole = true;
    out.value = Cplx(std::nan(""), std::nan(""));
    return out;
  }
  if (minus_form && sign_exp % 2 != 0) out.value = -out.value;
  return out;
}

}  // namespace

CFunctionValue c_theta_plus_gamma_form(const RootSystem& rs, const MultiplicityFunction& m,
                                       const ThetaSet& th, const CVec& lam) {
  GammaProductAccumulator acc;
  auto comp = roots::complement_positive_indices(rs, th);
  for (std::size_t p = 0; p < rs.positive_roots.size(); ++p) {
    if (std::find(comp.begin(), comp.end(), static_cast<int>(p)) != comp.end()) continue;
    const Vec& a = rs.positive_roots[p];
    Cplx x = roots::lambda_alpha(rs, lam, a);
    acc.mul_gamma(x);
    acc.div_gamma(x + m(rs, a) / 2.0);
  }
  return acc.finish();
}

CFunctionValue c_theta_minus_gamma_form(const RootSystem& rs, const MultiplicityFunction& m,
                                        const ThetaSet& th, const CVec& lam) {
  GammaProductAccumulator acc;
  for (int p : roots::complement_positive_indices(rs, th)) {
    const Vec& a = rs.positive_roots[p];
    Cplx x = roots::lambda_alpha(rs, lam, a);
    acc.mul_gamma(-x - m(rs, a) / 2.0 + 1.0);
    acc.div_gamma(-x + 1.0);
  }
  return acc.finish();
}

CFunctionValue c_theta_plus(const RootSystem& rs, const MultiplicityFunction& m,
                            const ThetaSet& th, const CVec& lam) {
  if (m.even()) {
    auto comp = roots::complement_positive_indices(rs, th);
    std::vector<int> theta_pos;
    for (std::size_t p = 0; p < rs.positive_roots.size(); ++p)
      if (std::find(comp.begin(), comp.end(), static_cast<int>(p)) == comp.end())
        theta_pos.push_back(static_cast<int>(p));
    return even_ratio_product(rs, m, theta_pos, lam, false);
  }
  return c_theta_plus_gamma_form(rs, m, th, lam);
}

CFunctionValue c_theta_minus(const RootSystem& rs, const MultiplicityFunction& m,
                             const ThetaSet& th, const CVec& lam) {
  if (m.even())
    return even_ratio_product(rs, m, roots::complement_positive_indices(rs, th), lam, true);
  return c_theta_minus_gamma_form(rs, m, th, lam);
}

CFunctionValue n_theta_minus(const RootSystem& rs, const MultiplicityFunction& m,
                             const ThetaSet& th, const CVec& lam) {
  GammaProductAccumulator acc;
  for (int p : roots::complement_positive_indices(rs, th)) {
    const Vec& a = rs.positive_roots[p];
    Cplx x = roots::lambda_alpha(rs, lam, a);
    acc.mul_gamma(-x - m(rs, a) / 2.0 + 1.0);
  }
  return acc.finish();
}

Cplx e_theta_minus(const RootSystem& rs, const MultiplicityFunction& m, const ThetaSet& th,
                   const CVec& lam) {
  if (!m.even()) throw PreconditionError("e_theta_minus requires an even multiplicity function");
  Cplx out = 1.0;
  for (int p : roots::complement_positive_indices(rs, th)) {
    const Vec& a = rs.positive_roots[p];
    long half = std::llround(m(rs, a) / 2.0);
    Cplx x = roots::lambda_alpha(rs, lam, a);
    for (long k = -half + 1; k <= half - 1; ++k) out *= x - static_cast<double>(k);
  }
  return out;
}

Cplx e_theta_plus(const RootSystem& rs, const MultiplicityFunction& m, const ThetaSet& th,
                  const CVec& lam) {
  if (!m.even()) throw PreconditionError("e_theta_plus requires an even multiplicity function");
  Cplx out = e_theta_minus(rs, m, th, lam);
  auto comp = roots::complement_positive_indices(rs, th);
  long exp_sum = 0;
  for (std::size_t p = 0; p < rs.positive_roots.size(); ++p) {
    if (std::find(comp.begin(), comp.end(), static_cast<int>(p)) != comp.end()) continue;
    exp_sum += std::llround(m(rs, rs.positive_roots[p]) / 2.0);  // m |<Theta>^+| / 2 summed per root
  }
  if (exp_sum % 2 != 0) out = -out;
  return out;
}

double d_theta(const RootSystem& rs, const MultiplicityFunction& m, const ThetaSet& th) {
  double s = 0.0;
  for (int p : roots::complement_positive_indices(rs, th)) s += m(rs, rs.positive_roots[p]);
  return 0.5 * s;
}

CFunctionValue c_pi0_minus(const RootSystem& rs, const MultiplicityFunction& m,
                           const ThetaSet& th, const CVec& lam) {
  GammaProductAccumulator acc;
  for (int p : roots::complement_positive_indices(rs, th)) {
    const Vec& a = rs.positive_roots[p];
    double ma = m(rs, a);
    Cplx x = roots::lambda_alpha(rs, lam, a);
    acc.mul_gamma(ma / 2.0);
    acc.mul_gamma(-x - ma / 2.0 + 1.0);
    acc.div_gamma(-x + 1.0);
  }
  return acc.finish();
}

}  // namespace thetasph::coeffs
