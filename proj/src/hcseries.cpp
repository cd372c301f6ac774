#include "thetasph/hcseries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace thetasph::series {

namespace {

constexpr double kGenericityTol = 1e-10;

std::string mu_to_string(const LatticeVector& mu) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < mu.coeffs.size(); ++i) os << (i ? "," : "") << mu.coeffs[i];
  os << ")";
  return os.str();
}

}  // namespace

std::uint64_t GammaTable::key_of(const std::vector<int>& coeffs) {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) k |= (static_cast<std::uint64_t>(coeffs[i] & 0xff) << (8 * i));
  return k;
}

const Cplx& GammaTable::at(const std::vector<int>& coeffs) const {
  auto it = index.find(key_of(coeffs));
  if (it == index.end()) throw std::out_of_range("GammaTable: entry not present");
  return values[it->second];
}

bool GammaTable::contains(const std::vector<int>& coeffs) const {
  return index.count(key_of(coeffs)) != 0;
}

GammaTable gamma_coeffs(const RootSystem& rs, const MultiplicityFunction& m, const CVec& lam,
                        int N) {
  if (N < 0) throw PreconditionError("gamma_coeffs: N must be >= 0");
  if (N > 254) throw PreconditionError("gamma_coeffs: N exceeds the supported cap (254)");

  GammaTable t;
  t.order = N;
  t.lam = lam;
  t.lattice = roots::lattice_enumerate(rs, N);
  t.values.assign(t.lattice.size(), Cplx(0.0));
  for (std::size_t i = 0; i < t.lattice.size(); ++i)
    t.index.emplace(GammaTable::key_of(t.lattice[i].coeffs), static_cast<int>(i));

  const int r = rs.rank;
  // Gram matrix of the simple roots and per-root helper data.
  std::vector<double> G(r * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) G[i * r + j] = rs.inner(rs.simple_roots[i], rs.simple_roots[j]);

  Vec rho_vec = coeffs::rho(rs, m);
  struct RootData {
    std::vector<int> c;     // simple-root coefficients
    double m_a;
    double norm2;           // <a,a>
    double rho_a;           // <rho, a>
    Cplx lam_a;             // <lam, a>
    Vec g;                  // G * c, so <mu, a> = n . g
  };
  std::vector<RootData> roots_data;
  for (std::size_t p = 0; p < rs.positive_roots.size(); ++p) {
    RootData d;
    d.c = rs.positive_coeffs[p];
    const Vec& a = rs.positive_roots[p];
    d.m_a = m(rs, a);
    d.norm2 = rs.inner(a, a);
    d.rho_a = rs.inner(rho_vec, a);
    d.lam_a = rs.inner(lam, a);
    d.g.assign(r, 0.0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) d.g[i] += G[i * r + j] * d.c[j];
    roots_data.push_back(std::move(d));
  }

  auto mu_dot = [&](const std::vector<int>& n, const Vec& g) {
    double s = 0.0;
    for (int i = 0; i < r; ++i) s += n[i] * g[i];
    return s;
  };

  // <mu, mu> via Gram matrix.
  auto mu_norm2 = [&](const std::vector<int>& n) {
    double s = 0.0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) s += n[i] * G[i * r + j] * n[j];
    return s;
  };

  // <mu, lam> with mu in coefficient space.
  CVec lam_dot_simple(r);
  for (int j = 0; j < r; ++j) lam_dot_simple[j] = rs.inner(lam, rs.simple_roots[j]);
  auto mu_dot_lam = [&](const std::vector<int>& n) {
    Cplx s = 0.0;
    for (int j = 0; j < r; ++j) s += static_cast<double>(n[j]) * lam_dot_simple[j];
    return s;
  };

  std::vector<int> shifted(r);
  for (std::size_t i = 0; i < t.lattice.size(); ++i) {
    const auto& mu = t.lattice[i];
    if (mu.height == 0) {
      t.values[i] = 1.0;  // Gamma_0 = 1
      continue;
    }
    Cplx denom = mu_norm2(mu.coeffs) - 2.0 * mu_dot_lam(mu.coeffs);
    if (std::abs(denom) < kGenericityTol)
      throw PreconditionError("non-generic lambda: <mu, mu - 2 lambda> ~ 0 at mu = " +
                              mu_to_string(mu));
    Cplx rhs = 0.0;
    for (const auto& rd : roots_data) {
      if (rd.m_a == 0.0) continue;
      double mu_a = mu_dot(mu.coeffs, rd.g);
      for (int k = 1;; ++k) {
        bool ok = true;
        for (int j = 0; j < r; ++j) {
          shifted[j] = mu.coeffs[j] - 2 * k * rd.c[j];
          if (shifted[j] < 0) { ok = false; break; }
        }
        if (!ok) break;
        Cplx gamma_prev = t.values[t.index.at(GammaTable::key_of(shifted))];
        Cplx inner = mu_a + rd.rho_a - 2.0 * k * rd.norm2 - rd.lam_a;
        rhs += rd.m_a * gamma_prev * inner;
      }
    }
    t.values[i] = 2.0 * rhs / denom;
  }
  return t;
}

SeriesValue phi_hc(const RootSystem& rs, const MultiplicityFunction& m, const CVec& lam,
                   const Vec& H, int N) {
  return phi_hc(rs, m, gamma_coeffs(rs, m, lam, N), H);
}

SeriesValue phi_hc(const RootSystem& rs, const MultiplicityFunction& m, const GammaTable& table,
                   const Vec& H) {
  if (!roots::is_dominant(rs, H))
    throw PreconditionError("phi_hc: H must be strictly dominant (alpha(H) > 0 for all simple alpha)");

  const CVec& lam = table.lam;
  Vec rho_vec = coeffs::rho(rs, m);

  // Partial sums per height, for the geometric tail estimate.
  std::vector<double> height_abs(table.order + 1, 0.0);
  Cplx sum = 0.0;
  int terms = 0;
  for (std::size_t i = 0; i < table.lattice.size(); ++i) {
    const auto& mu = table.lattice[i];
    double expo = 0.0;
    for (int j = 0; j < rs.rank; ++j)
      if (mu.coeffs[j] != 0) expo += mu.coeffs[j] * dot(rs.simple_roots[j], H);
    Cplx term = table.values[i] * std::exp(-expo);
    sum += term;
    height_abs[mu.height] += std::abs(term);
    ++terms;
  }

  Cplx prefactor = std::exp(cdot(lam, H) - dot(rho_vec, H));

  // Ratio test over the last nonzero height sums; geometric tail with a
  // safety factor of 10.
  SeriesValue out;
  out.value = prefactor * sum;
  out.terms_used = terms;
  std::vector<std::pair<int, double>> nonzero;
  for (int h = 0; h <= table.order; ++h)
    if (height_abs[h] > 0.0) nonzero.emplace_back(h, height_abs[h]);
  if (m.zero()) {
    out.tail_bound = 0.0;  // Phi_lam(0; a) = a^lam exactly
    return out;
  }
  if (nonzero.size() < 2) {
    out.tail_bound = std::numeric_limits<double>::infinity();  // no ratio information
    return out;
  }
  double q = 0.0;
  std::size_t start = nonzero.size() > 5 ? nonzero.size() - 5 : 1;
  for (std::size_t k = start; k < nonzero.size(); ++k) {
    auto [h1, v1] = nonzero[k - 1];
    auto [h2, v2] = nonzero[k];
    double per_height = std::pow(v2 / v1, 1.0 / (h2 - h1));
    q = std::max(q, per_height);
  }
  q = std::min(q, 0.995);
  double t_last = nonzero.back().second;
  out.tail_bound = 10.0 * std::abs(prefactor) * t_last * q / (1.0 - q);
  return out;
}

}  // namespace thetasph::series
