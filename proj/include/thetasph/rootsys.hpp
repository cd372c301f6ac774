#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thetasph/types.hpp"

namespace thetasph::roots {

using thetasph::Cplx;
using thetasph::CVec;
using thetasph::Vec;

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

Family family_from_string(const std::string& s);
std::string family_to_string(Family f);

// A reduced root system realized in the fixed orthonormal basis of a* == R^rank.
// A-D are generated programmatically, E/F/G come from the embedded simple-root
// tables (root_tables.hpp); the full root set is the reflection closure of the
// simple roots.  The bilinear form is the identity matrix in these coordinates;
// the normalization of each type is carried by the root lengths: A1 is scaled
// so that <alpha,alpha> = 1, all other types keep the standard realization
// (long roots of A-D-E have <alpha,alpha> = 2).
struct RootSystem {
  Family family;
  int rank;
  std::vector<Vec> roots;                       // closed under negation
  std::vector<Vec> simple_roots;                // Bourbaki order
  std::vector<Vec> positive_roots;
  std::vector<std::vector<int>> positive_coeffs;  // expansion over simple roots
  std::vector<double> gram;                     // rank x rank, row-major

  double inner(const Vec& a, const Vec& b) const;
  Cplx inner(const CVec& a, const CVec& b) const;  // C-bilinear extension
  Cplx inner(const CVec& a, const Vec& b) const;

  std::string label() const;                    // e.g. "A2"
  // Index of the root equal to v (tolerance 1e-9), or -1.
  int find_root(const Vec& v) const;
  bool is_positive_root_index(int idx_in_roots) const;
};

RootSystem build_root_system(Family family, int rank);
RootSystem build_root_system(const std::string& family, int rank);

// Subset of simple roots, stored as sorted unique 0-based indices.
struct ThetaSet {
  std::vector<int> indices;

  static ThetaSet full(int rank);
  static ThetaSet empty_set();
  static ThetaSet of(std::vector<int> zero_based, int rank);

  bool contains(int i) const;
  bool is_full(int rank) const;
  std::string to_string() const;
};

struct WeylElement {
  std::vector<int> mat_root;     // rank x rank action on a* in the simple-root basis
  std::vector<double> mat_onb;   // the same operator in orthonormal coordinates
  int det = 1;
  std::vector<int> word;         // reduced word in simple reflections (0-based)

  int rank() const;
  Vec apply(const Vec& v) const;
  CVec apply(const CVec& v) const;
  bool is_identity() const;
};

// Complete enumeration by breadth-first closure over simple-reflection
// products; identity first.  Throws when |W| would exceed cap.
std::vector<WeylElement> weyl_group(const RootSystem& rs, std::size_t cap = 1000000);

// The parabolic subgroup W_Theta alone (no coset data); identity first.
std::vector<WeylElement> weyl_subgroup(const RootSystem& rs, const ThetaSet& th,
                                       std::size_t cap = 1000000);

struct Parabolic {
  std::vector<WeylElement> subgroup;       // W_Theta
  std::vector<WeylElement> coset_reps;     // minimal-length representatives of W_Theta \ W
  std::vector<int> theta_positive;         // indices into positive_roots: <Theta>^+
  std::vector<int> complement_positive;    // Sigma^+ \ <Theta>^+
};

Parabolic parabolic(const RootSystem& rs, const ThetaSet& th, std::size_t cap = 1000000);

// Positive roots outside <Theta>^+, computable without enumerating W.
std::vector<int> complement_positive_indices(const RootSystem& rs, const ThetaSet& th);

struct LatticeVector {
  std::vector<int> coeffs;  // nonnegative, over the simple roots
  int height = 0;

  Vec to_vector(const RootSystem& rs) const;
};

// All mu with height <= max_height, sorted by height then lexicographically.
std::vector<LatticeVector> lattice_enumerate(const RootSystem& rs, int max_height,
                                             std::size_t cap = 4000000);

// <lam, alpha> / <alpha, alpha> with the bilinear extension of the form.
Cplx lambda_alpha(const RootSystem& rs, const CVec& lam, const Vec& alpha);
double lambda_alpha(const RootSystem& rs, const Vec& lam, const Vec& alpha);

// Membership in a_Theta = { H : alpha(H) > 0 for all alpha in Sigma^+ \ <Theta>^+ }.
bool a_theta_contains(const RootSystem& rs, const ThetaSet& th, const Vec& H);

bool is_dominant(const RootSystem& rs, const Vec& H, double margin = 0.0);

// Maps H into the closed dominant chamber by simple reflections; returns the
// image and the determinant of the applied element.
std::pair<Vec, int> to_dominant(const RootSystem& rs, const Vec& H);

}  // namespace thetasph::roots
