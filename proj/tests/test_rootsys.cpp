#include "thetasph/rootsys.hpp"

#include <cmath>
#include <set>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace thetasph;
using namespace thetasph::roots;

TEST_CASE("A1 realization uses <alpha,alpha> = 1") {
  auto rs = build_root_system(Family::A, 1);
  CHECK(rs.roots.size() == 2);
  CHECK(rs.simple_roots.size() == 1);
  CHECK(rs.inner(rs.simple_roots[0], rs.simple_roots[0]) == doctest::Approx(1.0));
}

TEST_CASE("A2 has 6 roots, 3 positive") {
  auto rs = build_root_system(Family::A, 2);
  CHECK(rs.roots.size() == 6);
  CHECK(rs.positive_roots.size() == 3);
  // standard realization: <alpha,alpha> = 2
  CHECK(rs.inner(rs.simple_roots[0], rs.simple_roots[0]) == doctest::Approx(2.0));
}

TEST_CASE("G2 has 12 roots, 6 positive") {
  auto rs = build_root_system(Family::G2, 2);
  CHECK(rs.roots.size() == 12);
  CHECK(rs.positive_roots.size() == 6);
}

TEST_CASE("exceptional and classical root counts") {
  CHECK(build_root_system(Family::B, 2).roots.size() == 8);
  CHECK(build_root_system(Family::B, 3).roots.size() == 18);
  CHECK(build_root_system(Family::C, 3).roots.size() == 18);
  CHECK(build_root_system(Family::D, 4).roots.size() == 24);
  CHECK(build_root_system(Family::F4, 4).roots.size() == 48);
  CHECK(build_root_system(Family::E6, 6).roots.size() == 72);
  CHECK(build_root_system(Family::E7, 7).roots.size() == 126);
  CHECK(build_root_system(Family::E8, 8).roots.size() == 240);
}

TEST_CASE("invalid family/rank rejected") {
  CHECK_THROWS_AS(build_root_system(Family::A, 0), PreconditionError);
  CHECK_THROWS_AS(build_root_system(Family::D, 2), PreconditionError);
  CHECK_THROWS_AS(build_root_system(Family::E6, 5), PreconditionError);
}

TEST_CASE("positive roots are nonnegative integer combinations of simple roots") {
  for (auto fam : {Family::A, Family::B, Family::G2}) {
    int rank = fam == Family::A ? 3 : (fam == Family::B ? 3 : 2);
    auto rs = build_root_system(fam, rank);
    for (std::size_t p = 0; p < rs.positive_roots.size(); ++p) {
      Vec rebuilt(rs.rank, 0.0);
      for (int j = 0; j < rs.rank; ++j) {
        CHECK(rs.positive_coeffs[p][j] >= 0);
        for (int i = 0; i < rs.rank; ++i) rebuilt[i] += rs.positive_coeffs[p][j] * rs.simple_roots[j][i];
      }
      for (int i = 0; i < rs.rank; ++i)
        CHECK(rebuilt[i] == doctest::Approx(rs.positive_roots[p][i]).epsilon(1e-9));
    }
  }
}

TEST_CASE("Weyl group orders") {
  CHECK(weyl_group(build_root_system(Family::A, 1)).size() == 2);
  CHECK(weyl_group(build_root_system(Family::A, 2)).size() == 6);
  CHECK(weyl_group(build_root_system(Family::B, 2)).size() == 8);
  CHECK(weyl_group(build_root_system(Family::G2, 2)).size() == 12);
  CHECK(weyl_group(build_root_system(Family::A, 3)).size() == 24);
  CHECK(weyl_group(build_root_system(Family::B, 3)).size() == 48);
}

TEST_CASE("Weyl enumeration cap") {
  auto rs = build_root_system(Family::B, 3);
  CHECK_THROWS_AS(weyl_group(rs, 10), PreconditionError);
}

TEST_CASE("Weyl elements permute the roots and preserve the form") {
  for (auto fam : {Family::A, Family::B, Family::G2}) {
    int rank = fam == Family::A ? 3 : (fam == Family::B ? 3 : 2);
    auto rs = build_root_system(fam, rank);
    auto W = weyl_group(rs);
    CHECK(W.front().is_identity());
    for (const auto& w : W) {
      CHECK(w.det == ((w.word.size() % 2 == 0) ? 1 : -1));
      for (const auto& a : rs.roots) {
        Vec img = w.apply(a);
        CHECK(rs.find_root(img) >= 0);
        CHECK(rs.inner(img, img) == doctest::Approx(rs.inner(a, a)).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("parabolic decomposition A2") {
  auto rs = build_root_system(Family::A, 2);

  auto full = parabolic(rs, ThetaSet::full(2));
  CHECK(full.subgroup.size() == 6);
  CHECK(full.coset_reps.size() == 1);
  CHECK(full.complement_positive.empty());

  auto empty = parabolic(rs, ThetaSet::empty_set());
  CHECK(empty.subgroup.size() == 1);
  CHECK(empty.coset_reps.size() == 6);
  CHECK(empty.complement_positive.size() == 3);

  auto one = parabolic(rs, ThetaSet::of({0}, 2));
  CHECK(one.subgroup.size() == 2);
  CHECK(one.coset_reps.size() == 3);
  CHECK(one.complement_positive.size() == 2);
}

TEST_CASE("parabolic factorization is unique (rank <= 3)") {
  std::vector<std::tuple<Family, int, std::vector<int>>> cases;
  cases.emplace_back(Family::A, 2, std::vector<int>{0});
  cases.emplace_back(Family::A, 3, std::vector<int>{0, 2});
  cases.emplace_back(Family::B, 3, std::vector<int>{1, 2});
  for (auto& [fam, rank, theta] : cases) {
    auto rs = build_root_system(fam, rank);
    auto par = parabolic(rs, ThetaSet::of(theta, rank));
    auto W = weyl_group(rs);
    std::set<std::vector<int>> seen;
    for (const auto& u : par.subgroup)
      for (const auto& v : par.coset_reps) {
        // u * v as matrices in the root basis
        const int r = rs.rank;
        std::vector<int> m(r * r, 0);
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) {
            int s = 0;
            for (int k = 0; k < r; ++k) s += u.mat_root[i * r + k] * v.mat_root[k * r + j];
            m[i * r + j] = s;
          }
        CHECK(seen.insert(m).second);  // no duplicates: factorization unique
      }
    CHECK(seen.size() == W.size());
  }
}

TEST_CASE("lattice enumeration") {
  auto a1 = build_root_system(Family::A, 1);
  auto l1 = lattice_enumerate(a1, 3);
  REQUIRE(l1.size() == 4);
  CHECK(l1[0].coeffs == std::vector<int>{0});
  CHECK(l1[1].coeffs == std::vector<int>{1});
  CHECK(l1[3].coeffs == std::vector<int>{3});

  auto a2 = build_root_system(Family::A, 2);
  auto l2 = lattice_enumerate(a2, 1);
  REQUIRE(l2.size() == 3);
  CHECK(l2[0].height == 0);
  CHECK(l2[1].coeffs == std::vector<int>{1, 0});
  CHECK(l2[2].coeffs == std::vector<int>{0, 1});
  CHECK(lattice_enumerate(a2, 2).size() == 6);
}

TEST_CASE("lattice count matches stars and bars") {
  auto choose = [](long n, long k) {
    double v = 1.0;
    for (long i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
    return static_cast<long>(v + 0.5);
  };
  for (int r = 1; r <= 4; ++r) {
    auto rs = build_root_system(Family::A, r);
    for (int N = 0; N <= 10; ++N)
      CHECK(static_cast<long>(lattice_enumerate(rs, N).size()) == choose(N + r, r));
  }
}

TEST_CASE("lambda_alpha basics") {
  auto rs = build_root_system(Family::A, 1);
  const Vec& alpha = rs.simple_roots[0];
  CVec two_alpha = complexify(alpha);
  for (auto& x : two_alpha) x *= 2.0;
  CHECK(lambda_alpha(rs, two_alpha, alpha) == Cplx(2.0, 0.0));
  CVec i_alpha = complexify(alpha);
  for (auto& x : i_alpha) x *= Cplx(0.0, 1.0);
  CHECK(lambda_alpha(rs, i_alpha, alpha) == Cplx(0.0, 1.0));
}

TEST_CASE("a_theta membership closed form") {
  auto rs = build_root_system(Family::A, 2);
  // Theta = Pi: everything belongs
  testutil::Rng rng(7);
  for (int k = 0; k < 50; ++k) {
    Vec H = rng.point(2, -3.0, 3.0);
    CHECK(a_theta_contains(rs, ThetaSet::full(2), H));
  }
  // Theta = {}: a_empty = a^+
  auto a1 = build_root_system(Family::A, 1);
  Vec Hpos{1.0};
  CHECK(a_theta_contains(a1, ThetaSet::empty_set(), Hpos));
  CHECK(!a_theta_contains(a1, ThetaSet::empty_set(), Vec{-0.5}));
}

TEST_CASE("a_theta agrees with brute-force chamber union") {
  testutil::Rng rng(11);
  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::B, 3}, {Family::G2, 2}}) {
    auto rs = build_root_system(fam, rank);
    std::vector<ThetaSet> thetas = {ThetaSet::empty_set(), ThetaSet::full(rank)};
    for (int i = 0; i < rank; ++i) thetas.push_back(ThetaSet::of({i}, rank));
    for (const auto& th : thetas) {
      auto sub = weyl_subgroup(rs, th);
      int compared = 0;
      for (int k = 0; k < 1200 && compared < 1000; ++k) {
        Vec H = rng.point(rank, -2.0, 2.0);
        bool on_wall = false;
        for (const auto& a : rs.roots)
          if (std::abs(dot(a, H)) < 1e-6) on_wall = true;
        if (on_wall) continue;
        ++compared;
        bool brute = false;
        for (const auto& u : sub)
          if (is_dominant(rs, u.apply(H), -1e-12)) brute = true;
        CHECK(a_theta_contains(rs, th, H) == brute);
      }
      CHECK(compared >= 1000);
    }
  }
}

TEST_CASE("spec example: A2 theta={alpha1} membership") {
  auto rs = build_root_system(Family::A, 2);
  auto th = ThetaSet::of({0}, 2);
  // H with alpha2(H) < 0 and (alpha1+alpha2)(H) > 0 must be rejected.
  const Vec& a1 = rs.simple_roots[0];
  const Vec& a2 = rs.simple_roots[1];
  testutil::Rng rng(3);
  bool found = false;
  for (int k = 0; k < 2000 && !found; ++k) {
    Vec H = rng.point(2, -2.0, 2.0);
    if (dot(a2, H) < -0.05 && dot(a1, H) + dot(a2, H) > 0.05) {
      found = true;
      CHECK(!a_theta_contains(rs, th, H));
    }
  }
  CHECK(found);
}

TEST_CASE("to_dominant lands in the closed chamber with matching sign") {
  auto rs = build_root_system(Family::B, 2);
  testutil::Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    Vec H = rng.point(2, -2.0, 2.0);
    auto [Hd, det] = to_dominant(rs, H);
    (void)det;
    CHECK(is_dominant(rs, Hd, -1e-9));
    CHECK(rs.inner(Hd, Hd) == doctest::Approx(rs.inner(H, H)));
  }
}
