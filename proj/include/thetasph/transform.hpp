#pragma once

#include <functional>

#include "thetasph/thetafunc.hpp"

namespace thetasph::transform {

using coeffs::MultiplicityFunction;
using roots::RootSystem;
using roots::ThetaSet;

// Tensor-product Gauss-Legendre nodes on a box in log coordinates.
// `chamber` grids must lie in the closure of a^+ (used with the
// integral-over-A^+ form of the transform); `full_space` grids cover a
// W-stable box and stand for (1/|W|) * integral over A (W-invariant
// integrands only).
struct RadialGrid {
  std::vector<Vec> nodes;
  std::vector<double> weights;
  Vec lo, hi;
  bool full_space = false;
};

RadialGrid radial_grid_chamber(const RootSystem& rs, const Vec& lo, const Vec& hi,
                               int points_per_dim);
RadialGrid radial_grid_full(const RootSystem& rs, double extent, int points_per_dim);

// Midpoint nodes on i*[-L,L]^r (lambda = i t); the node set contains no zero
// coordinate hyperplane points and is W-symmetrized: the plain cube nodes are
// replaced by their full W-orbits with weights divided by |W| (exact for
// W_Theta-invariant integrands up to the boundary tail).
struct SpectralGrid {
  std::vector<Vec> nodes;      // t-vectors; the spectral point is lambda = i t
  std::vector<double> weights;
  double extent = 0.0;
};

SpectralGrid spectral_grid(const RootSystem& rs, double L, int points_per_dim,
                           bool symmetrize = true);

// Compactly supported W_Theta-invariant test function (evaluator + declared
// support box + smoothness tag).
struct CompactFunction {
  std::function<double(const Vec&)> eval;
  Vec lo, hi;                 // support box in log coordinates
  std::string smoothness = "smooth";
};

// Smooth bump prod_i exp(-1/(1-u_i^2)) on the box (lo, hi), 0 outside.
CompactFunction box_bump(const Vec& lo, const Vec& hi);
// Radial (hence W-invariant) annular bump supported on r in (r0, r1).
CompactFunction radial_bump(int rank, double r0, double r1);
// W_Theta-symmetrized copy of a bump supported inside a^+.
CompactFunction symmetrized_bump(const RootSystem& rs, const ThetaSet& th,
                                 const CompactFunction& base);

// Per-node samples w_k * f(H_k) * delta(m; H_k); reused across spectral points.
struct RadialPlan {
  std::vector<Vec> nodes;
  std::vector<Cplx> coeff;   // weight * f * delta (times 1/|W| on full-space grids)
  bool full_space = false;
};

RadialPlan radial_plan(const RootSystem& rs, const MultiplicityFunction& m,
                       const CompactFunction& f, const RadialGrid& grid);

// F_Theta f(m; lam) = int_{A^+} f phi_Theta delta da (quadrature).
Cplx theta_transform(const RootSystem& rs, const MultiplicityFunction& m, const ThetaSet& th,
                     const CompactFunction& f, const RadialGrid& grid, const CVec& lam, int N = 40);
Cplx theta_transform(const RootSystem& rs, const MultiplicityFunction& m, const ThetaSet& th,
                     const RadialPlan& plan, const CVec& lam, int N = 40);

// Plancherel density |c_Theta^+(m; it) c_Theta^-(m; it)|^{-2}.
double plancherel_density(const RootSystem& rs, const MultiplicityFunction& m, const ThetaSet& th,
                          const Vec& t);

// f(a) = kappa (|W|/|W_Theta|) int F(lam) E_Theta(m; -lam, a) |c_Theta|^{-2} dlam,
// with F tabulated on the grid nodes.  Non-finite density nodes are skipped
// and counted in *skipped when provided.
Cplx invert(const RootSystem& rs, const MultiplicityFunction& m, const ThetaSet& th,
            const std::vector<Cplx>& spectral_values, const SpectralGrid& grid, const Vec& H,
            double kappa, int N = 40, int* skipped = nullptr);

// Wave packet (I g)(a) = int g(lam) phi_Pi(m; -lam, a) |c_Pi^+|^{-2} dlam;
// the Theta-wave-packet is its restriction to a_Theta.
Cplx wave_packet(const RootSystem& rs, const MultiplicityFunction& m,
                 const std::vector<Cplx>& spectral_values, const SpectralGrid& grid, const Vec& H,
                 int N = 40);

// Least-squares scalar matching invert(theta_transform(reference)) to the
// reference on interior sample points.
double calibrate_kappa(const RootSystem& rs, const MultiplicityFunction& m, const ThetaSet& th,
                       const RadialGrid& rgrid, const SpectralGrid& sgrid,
                       const CompactFunction& reference, int N = 40);

// Tabulate F_Theta(reference) on every spectral node (lambda = i t).
std::vector<Cplx> tabulate_transform(const RootSystem& rs, const MultiplicityFunction& m,
                                     const ThetaSet& th, const CompactFunction& f,
                                     const RadialGrid& rgrid, const SpectralGrid& sgrid,
                                     int N = 40);

// Sampled function from CSV rows "x1,...,xr,value".  The rows must enumerate a
// full tensor grid (any order); evaluation is multilinear interpolation inside
// the sampled box and 0 outside.  Ranks 1 and 2 are supported.
CompactFunction function_from_csv(const std::string& path, int rank);

}  // namespace thetasph::transform
