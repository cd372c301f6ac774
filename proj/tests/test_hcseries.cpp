#include "thetasph/hcseries.hpp"

#include <cmath>

#include "doctest.h"
#include "test_helpers.hpp"
#include "thetasph/oracles.hpp"

using namespace thetasph;
using namespace thetasph::series;
using coeffs::MultiplicityFunction;
using roots::Family;
using roots::build_root_system;
using testutil::rel_err;

namespace {

CVec lam_of(const roots::RootSystem& rs, Cplx c) {
  CVec out = complexify(rs.simple_roots[0]);
  for (auto& x : out) x *= c;
  return out;
}

}  // namespace

TEST_CASE("Gamma table basics") {
  auto a1 = build_root_system(Family::A, 1);
  auto m2 = MultiplicityFunction::constant(a1, 2.0);
  auto t = gamma_coeffs(a1, m2, lam_of(a1, Cplx(0.37, 0.52)), 24);
  CHECK(t.at({0}) == Cplx(1.0, 0.0));
  // odd multiples of alpha vanish (empty recursion sum)
  for (int n = 1; n <= 23; n += 2) CHECK(std::abs(t.at({n})) == 0.0);
  // complex case: Gamma_{2n alpha}(2; lam) = 1 for all generic lam
  for (int n = 2; n <= 24; n += 2) CHECK(rel_err(t.at({n}), Cplx(1.0, 0.0)) < 1e-12);
}

TEST_CASE("non-generic lambda rejected with offending mu") {
  auto a1 = build_root_system(Family::A, 1);
  auto m2 = MultiplicityFunction::constant(a1, 2.0);
  // <mu, mu-2lam> = n(n - 2 lam); lam = 1 makes mu = 2 alpha resonant
  try {
    gamma_coeffs(a1, m2, lam_of(a1, Cplx(1.0, 0.0)), 8);
    FAIL("expected PreconditionError");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("mu") != std::string::npos);
  }
}

TEST_CASE("recursion residual vanishes (rank <= 3, N <= 12)") {
  testutil::Rng rng(67);
  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::A, 1}, {Family::A, 2}, {Family::B, 2}, {Family::A, 3}, {Family::G2, 2}}) {
    auto rs = build_root_system(fam, rank);
    for (double mv : {1.0, 2.0, 3.5}) {
      auto m = MultiplicityFunction::constant(rs, mv);
      CVec lam = rng.spectral(rank, 0.25, 1.7, 0.3, 1.3);
      auto table = gamma_coeffs(rs, m, lam, 12);
      Vec rho_vec = coeffs::rho(rs, m);
      for (std::size_t i = 0; i < table.lattice.size(); ++i) {
        const auto& mu = table.lattice[i];
        if (mu.height == 0) continue;
        Vec mu_vec = mu.to_vector(rs);
        Cplx lhs = (rs.inner(mu_vec, mu_vec) - 2.0 * rs.inner(lam, mu_vec)) * table.values[i];
        Cplx rhs = 0.0;
        for (std::size_t p = 0; p < rs.positive_roots.size(); ++p) {
          const Vec& a = rs.positive_roots[p];
          for (int k = 1;; ++k) {
            std::vector<int> shifted(rs.rank);
            bool ok = true;
            for (int j = 0; j < rs.rank; ++j) {
              shifted[j] = mu.coeffs[j] - 2 * k * rs.positive_coeffs[p][j];
              if (shifted[j] < 0) ok = false;
            }
            if (!ok) break;
            // <mu + rho - 2k a - lam, a>
            Cplx inner = rs.inner(complexify(mu_vec), a) + rs.inner(rho_vec, a) -
                         2.0 * k * rs.inner(a, a) - rs.inner(lam, a);
            rhs += m(rs, a) * table.at(shifted) * inner;
          }
        }
        rhs *= 2.0;
        double scale = std::max(std::abs(lhs), std::abs(rhs)) + 1e-30;
        CHECK(std::abs(lhs - rhs) / scale < 1e-12);
      }
    }
  }
}

TEST_CASE("phi_hc m=0 is exactly the exponential") {
  auto a2 = build_root_system(Family::A, 2);
  auto m0 = MultiplicityFunction::constant(a2, 0.0);
  testutil::Rng rng(71);
  for (int k = 0; k < 20; ++k) {
    CVec lam = rng.spectral(2, -1.0, 1.0, -1.0, 1.0);
    Vec H{rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0)};
    if (!roots::is_dominant(a2, H)) continue;
    auto v = phi_hc(a2, m0, lam, H, 6);
    CHECK(rel_err(v.value, std::exp(cdot(lam, H))) < 1e-15);
    CHECK(v.tail_bound == 0.0);
  }
}

TEST_CASE("phi_hc requires dominant H") {
  auto a1 = build_root_system(Family::A, 1);
  auto m2 = MultiplicityFunction::constant(a1, 2.0);
  CHECK_THROWS_AS(phi_hc(a1, m2, lam_of(a1, Cplx(0.3, 0.4)), Vec{-0.5}, 10), PreconditionError);
}

TEST_CASE("A1 m=2 matches Delta^{-1} a^lam within tail bound") {
  auto a1 = build_root_system(Family::A, 1);
  auto m2 = MultiplicityFunction::constant(a1, 2.0);
  testutil::Rng rng(73);
  for (int k = 0; k < 25; ++k) {
    Cplx l = rng.complex_in(-1.2, 1.2, -1.2, 1.2);
    double t = rng.uniform(0.5, 3.0);
    auto v = phi_hc(a1, m2, lam_of(a1, l), Vec{t}, 40);
    Cplx expect = std::exp(l * t) / (2.0 * std::sinh(t));
    CHECK(std::abs(v.value - expect) <= std::max(v.tail_bound, 1e-12 * std::abs(expect)));
  }
}

TEST_CASE("rank-one 2F1 cross-validation, m in {2,4,6}") {
  auto a1 = build_root_system(Family::A, 1);
  testutil::Rng rng(79);
  for (double mv : {2.0, 4.0, 6.0}) {
    auto m = MultiplicityFunction::constant(a1, mv);
    for (int k = 0; k < 20; ++k) {
      Cplx l = rng.complex_in(0.2, 1.6, 0.2, 1.4);
      double t = rng.uniform(0.8, 3.0);
      auto v = phi_hc(a1, m, lam_of(a1, l), Vec{t}, 40);
      Cplx expect = oracles::rankone_phi_second_kind(mv, l, t);
      CHECK(rel_err(v.value, expect) < 1e-8);
    }
  }
  // the spec's pinned example: m even, alpha(H)=2, lam = 0.3+0.7i, N=40
  for (double mv : {2.0, 4.0, 6.0}) {
    auto m = MultiplicityFunction::constant(a1, mv);
    auto v = phi_hc(a1, m, lam_of(a1, Cplx(0.3, 0.7)), Vec{2.0}, 40);
    CHECK(rel_err(v.value, oracles::rankone_phi_second_kind(mv, Cplx(0.3, 0.7), 2.0)) < 1e-8);
  }
}

TEST_CASE("truncation monotonicity against the tail bound") {
  auto a1 = build_root_system(Family::A, 1);
  auto a2 = build_root_system(Family::A, 2);
  testutil::Rng rng(83);
  for (int k = 0; k < 10; ++k) {
    {
      auto m = MultiplicityFunction::constant(a1, 4.0);
      Cplx l = rng.complex_in(0.2, 1.2, 0.1, 0.9);
      double t = rng.uniform(0.6, 2.0);
      auto vN = phi_hc(a1, m, lam_of(a1, l), Vec{t}, 24);
      auto vM = phi_hc(a1, m, lam_of(a1, l), Vec{t}, 40);
      CHECK(std::abs(vN.value - vM.value) <= vN.tail_bound + 1e-14);
    }
    {
      auto m = MultiplicityFunction::constant(a2, 2.0);
      CVec lam = rng.spectral(2, 0.2, 1.2, 0.1, 0.9);
      Vec H{rng.uniform(0.6, 1.5), rng.uniform(0.6, 1.5)};
      if (!roots::is_dominant(a2, H, 0.5)) continue;
      auto vN = phi_hc(a2, m, lam, H, 16);
      auto vM = phi_hc(a2, m, lam, H, 28);
      CHECK(std::abs(vN.value - vM.value) <= vN.tail_bound + 1e-14);
    }
  }
}

TEST_CASE("A2 m=2 coefficients count lattice decompositions") {
  // Delta^{-1} a^lam expansion: Gamma_{2(n1 a1 + n2 a2)} = min(n1,n2) + 1.
  auto a2 = build_root_system(Family::A, 2);
  auto m2 = MultiplicityFunction::constant(a2, 2.0);
  testutil::Rng rng(89);
  CVec lam = rng.spectral(2, 0.3, 1.4, 0.2, 1.1);
  auto table = gamma_coeffs(a2, m2, lam, 12);
  for (std::size_t i = 0; i < table.lattice.size(); ++i) {
    const auto& mu = table.lattice[i];
    bool even = mu.coeffs[0] % 2 == 0 && mu.coeffs[1] % 2 == 0;
    if (!even) {
      CHECK(std::abs(table.values[i]) < 1e-12);
      continue;
    }
    int n1 = mu.coeffs[0] / 2, n2 = mu.coeffs[1] / 2;
    CHECK(rel_err(table.values[i], Cplx(std::min(n1, n2) + 1.0, 0.0)) < 1e-11);
  }
}
