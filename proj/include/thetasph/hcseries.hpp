#pragma once

#include <unordered_map>
#include <vector>

#include "thetasph/coeffs.hpp"
#include "thetasph/rootsys.hpp"

namespace thetasph::series {

using coeffs::MultiplicityFunction;
using roots::LatticeVector;
using roots::RootSystem;

// Harish-Chandra coefficients Gamma_mu(m; lam) for all mu of height <= order,
// filled in height order from the recurrence
//   <mu, mu - 2 lam> Gamma_mu = 2 sum_{a>0} m_a sum_{k>=1, mu-2ka in Lambda}
//                                Gamma_{mu-2ka} <mu + rho - 2ka - lam, a>.
struct GammaTable {
  int order = 0;
  CVec lam;
  std::vector<LatticeVector> lattice;  // height order
  std::vector<Cplx> values;            // aligned with lattice

  const Cplx& at(const std::vector<int>& coeffs) const;
  bool contains(const std::vector<int>& coeffs) const;

  std::unordered_map<std::uint64_t, int> index;
  static std::uint64_t key_of(const std::vector<int>& coeffs);
};

// Throws PreconditionError when lam is non-generic: |<mu, mu-2lam>| < 1e-10
// for some 0 < height(mu) <= N (the offending mu is named in the message).
GammaTable gamma_coeffs(const RootSystem& rs, const MultiplicityFunction& m, const CVec& lam,
                        int N);

struct SeriesValue {
  Cplx value{0.0, 0.0};
  double tail_bound = 0.0;
  int terms_used = 0;
};

// Phi_lam(m; exp H) truncated at height N; requires H strictly dominant.
SeriesValue phi_hc(const RootSystem& rs, const MultiplicityFunction& m, const CVec& lam,
                   const Vec& H, int N);

// Same, reusing a prebuilt coefficient table (must match m and lam).
SeriesValue phi_hc(const RootSystem& rs, const MultiplicityFunction& m, const GammaTable& table,
                   const Vec& H);

}  // namespace thetasph::series
