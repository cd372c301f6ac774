#include "thetasph/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "thetasph/root_tables.hpp"

namespace thetasph::roots {

namespace {

constexpr double kTol = 1e-9;

bool vec_eq(const Vec& a, const Vec& b, double tol = kTol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

bool vec_less(const Vec& a, const Vec& b, double tol = kTol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i] - tol) return true;
    if (a[i] > b[i] + tol) return false;
  }
  return false;
}

double ambient_dot(const Vec& a, const Vec& b) { return dot(a, b); }

Vec reflect(const Vec& v, const Vec& alpha) {
  double c = 2.0 * ambient_dot(v, alpha) / ambient_dot(alpha, alpha);
  Vec out(v);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] -= c * alpha[i];
  return out;
}

// Reflection closure of the simple roots; valid for any finite system.
std::vector<Vec> closure(const std::vector<Vec>& simple) {
  std::vector<Vec> all;
  auto add = [&](const Vec& v) {
    for (const auto& w : all)
      if (vec_eq(v, w)) return false;
    all.push_back(v);
    return true;
  };
  for (const auto& s : simple) add(s);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (const auto& s : simple) {
        Vec r = reflect(all[i], s);
        if (add(r)) grew = true;
      }
    }
  }
  std::sort(all.begin(), all.end(), [](const Vec& a, const Vec& b) { return vec_less(a, b); });
  return all;
}

// Solves P c = v in the least-squares sense where the columns of P are the
// simple roots (they span the root space).  Gaussian elimination on the
// normal equations; rank <= 8 so this is exact enough.
std::vector<double> simple_coefficients(const std::vector<Vec>& simple, const Vec& v) {
  const int r = static_cast<int>(simple.size());
  std::vector<std::vector<double>> a(r, std::vector<double>(r + 1, 0.0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) a[i][j] = ambient_dot(simple[i], simple[j]);
    a[i][r] = ambient_dot(simple[i], v);
  }
  for (int col = 0; col < r; ++col) {
    int piv = col;
    for (int i = col + 1; i < r; ++i)
      if (std::abs(a[i][col]) > std::abs(a[piv][col])) piv = i;
    std::swap(a[col], a[piv]);
    for (int i = 0; i < r; ++i) {
      if (i == col) continue;
      double f = a[i][col] / a[col][col];
      for (int j = col; j <= r; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<double> c(r);
  for (int i = 0; i < r; ++i) c[i] = a[i][r] / a[i][i];
  return c;
}

// Gram-Schmidt orthonormal basis of span(simple) in the ambient space.
std::vector<Vec> orthonormal_basis(const std::vector<Vec>& simple) {
  std::vector<Vec> basis;
  for (const auto& s : simple) {
    Vec v(s);
    for (const auto& b : basis) {
      double c = ambient_dot(v, b);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
    }
    double n = std::sqrt(ambient_dot(v, v));
    if (n < kTol) throw std::logic_error("simple roots are linearly dependent");
    for (auto& x : v) x /= n;
    basis.push_back(v);
  }
  return basis;
}

Vec project(const std::vector<Vec>& basis, const Vec& v) {
  Vec out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) out[i] = ambient_dot(basis[i], v);
  return out;
}

std::vector<Vec> classical_simple_roots(Family f, int rank, int* ambient_dim) {
  std::vector<Vec> simple;
  auto e = [&](int i, int dim) {
    Vec v(dim, 0.0);
    v[i] = 1.0;
    return v;
  };
  switch (f) {
    case Family::A: {
      if (rank == 1) {
        // Rank-one convention <alpha,alpha> = 1.
        *ambient_dim = 1;
        simple.push_back(Vec{1.0});
        break;
      }
      int dim = rank + 1;
      *ambient_dim = dim;
      for (int i = 0; i < rank; ++i) {
        Vec v(dim, 0.0);
        v[i] = 1.0;
        v[i + 1] = -1.0;
        simple.push_back(v);
      }
      break;
    }
    case Family::B: {
      *ambient_dim = rank;
      for (int i = 0; i < rank - 1; ++i) {
        Vec v(rank, 0.0);
        v[i] = 1.0;
        v[i + 1] = -1.0;
        simple.push_back(v);
      }
      simple.push_back(e(rank - 1, rank));
      break;
    }
    case Family::C: {
      *ambient_dim = rank;
      for (int i = 0; i < rank - 1; ++i) {
        Vec v(rank, 0.0);
        v[i] = 1.0;
        v[i + 1] = -1.0;
        simple.push_back(v);
      }
      Vec v(rank, 0.0);
      v[rank - 1] = 2.0;
      simple.push_back(v);
      break;
    }
    case Family::D: {
      *ambient_dim = rank;
      for (int i = 0; i < rank - 1; ++i) {
        Vec v(rank, 0.0);
        v[i] = 1.0;
        v[i + 1] = -1.0;
        simple.push_back(v);
      }
      Vec v(rank, 0.0);
      v[rank - 2] = 1.0;
      v[rank - 1] = 1.0;
      simple.push_back(v);
      break;
    }
    default:
      throw std::logic_error("classical_simple_roots: not a classical family");
  }
  return simple;
}

int expected_root_count(Family f, int rank) {
  switch (f) {
    case Family::A: return rank * (rank + 1);
    case Family::B:
    case Family::C: return 2 * rank * rank;
    case Family::D: return 2 * rank * (rank - 1);
    case Family::E6: return 72;
    case Family::E7: return 126;
    case Family::E8: return 240;
    case Family::F4: return 48;
    case Family::G2: return 12;
  }
  return -1;
}

void validate_family_rank(Family f, int rank) {
  auto bad = [&]() {
    throw PreconditionError("unsupported (family, rank): " + family_to_string(f) + std::to_string(rank));
  };
  switch (f) {
    case Family::A: if (rank < 1) bad(); break;
    case Family::B: if (rank < 2) bad(); break;
    case Family::C: if (rank < 2) bad(); break;
    case Family::D: if (rank < 3) bad(); break;
    case Family::E6: if (rank != 6) bad(); break;
    case Family::E7: if (rank != 7) bad(); break;
    case Family::E8: if (rank != 8) bad(); break;
    case Family::F4: if (rank != 4) bad(); break;
    case Family::G2: if (rank != 2) bad(); break;
  }
  if (rank > 8) bad();
}

std::vector<int> round_coeffs(const std::vector<double>& c) {
  std::vector<int> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    double r = std::round(c[i]);
    if (std::abs(c[i] - r) > 1e-7)
      throw std::logic_error("root expansion coefficient is not an integer");
    out[i] = static_cast<int>(r);
  }
  return out;
}

std::vector<int> mat_mul(const std::vector<int>& a, const std::vector<int>& b, int r) {
  std::vector<int> c(r * r, 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      int aik = a[i * r + k];
      if (aik == 0) continue;
      for (int j = 0; j < r; ++j) c[i * r + j] += aik * b[k * r + j];
    }
  return c;
}

struct BfsContext {
  const RootSystem* rs;
  std::vector<std::vector<int>> gen_mats;  // simple reflections, root basis
  std::vector<int> gen_ids;                // which simple reflection each is
  std::vector<double> P;                   // rank x rank: columns are simple roots (ONB coords)
  std::vector<double> Pinv;
};

std::vector<double> invert_matrix(const std::vector<double>& m, int r) {
  std::vector<std::vector<double>> a(r, std::vector<double>(2 * r, 0.0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) a[i][j] = m[i * r + j];
    a[i][r + i] = 1.0;
  }
  for (int col = 0; col < r; ++col) {
    int piv = col;
    for (int i = col + 1; i < r; ++i)
      if (std::abs(a[i][col]) > std::abs(a[piv][col])) piv = i;
    std::swap(a[col], a[piv]);
    double d = a[col][col];
    for (int j = 0; j < 2 * r; ++j) a[col][j] /= d;
    for (int i = 0; i < r; ++i) {
      if (i == col) continue;
      double f = a[i][col];
      for (int j = 0; j < 2 * r; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<double> inv(r * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) inv[i * r + j] = a[i][r + j];
  return inv;
}

BfsContext make_context(const RootSystem& rs) {
  BfsContext ctx;
  ctx.rs = &rs;
  const int r = rs.rank;
  for (int i = 0; i < r; ++i) {
    std::vector<int> m(r * r, 0);
    for (int j = 0; j < r; ++j) {
      // r_i(alpha_j) = alpha_j - C_ij alpha_i, C_ij = 2<alpha_j,alpha_i>/<alpha_i,alpha_i>
      double cij = 2.0 * rs.inner(rs.simple_roots[j], rs.simple_roots[i]) /
                   rs.inner(rs.simple_roots[i], rs.simple_roots[i]);
      double rounded = std::round(cij);
      if (std::abs(cij - rounded) > 1e-9) throw std::logic_error("non-integral Cartan entry");
      m[j * r + j] += 1;
      m[i * r + j] -= static_cast<int>(rounded);
    }
    ctx.gen_mats.push_back(std::move(m));
    ctx.gen_ids.push_back(i);
  }
  ctx.P.assign(r * r, 0.0);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) ctx.P[i * r + j] = rs.simple_roots[j][i];
  ctx.Pinv = invert_matrix(ctx.P, r);
  return ctx;
}

WeylElement make_element(const BfsContext& ctx, std::vector<int> mat, std::vector<int> word) {
  const int r = ctx.rs->rank;
  WeylElement w;
  w.mat_root = std::move(mat);
  w.word = std::move(word);
  w.det = (w.word.size() % 2 == 0) ? 1 : -1;
  // M_onb = P * M_root * P^{-1}
  std::vector<double> tmp(r * r, 0.0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      double s = 0.0;
      for (int k = 0; k < r; ++k) s += ctx.P[i * r + k] * w.mat_root[k * r + j];
      tmp[i * r + j] = s;
    }
  w.mat_onb.assign(r * r, 0.0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      double s = 0.0;
      for (int k = 0; k < r; ++k) s += tmp[i * r + k] * ctx.Pinv[k * r + j];
      w.mat_onb[i * r + j] = s;
    }
  return w;
}

std::vector<WeylElement> bfs_group(const RootSystem& rs, const std::vector<int>& generators,
                                   std::size_t cap) {
  const int r = rs.rank;
  BfsContext ctx = make_context(rs);
  std::vector<int> id(r * r, 0);
  for (int i = 0; i < r; ++i) id[i * r + i] = 1;

  std::map<std::vector<int>, std::size_t> seen;
  std::vector<WeylElement> out;
  std::deque<std::size_t> queue;
  out.push_back(make_element(ctx, id, {}));
  seen.emplace(out[0].mat_root, 0);
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (int g : generators) {
      // extend the word on the right: w' = w * r_g
      std::vector<int> m = mat_mul(out[cur].mat_root, ctx.gen_mats[g], r);
      if (seen.count(m)) continue;
      if (out.size() >= cap)
        throw PreconditionError("Weyl group enumeration exceeds cap of " + std::to_string(cap));
      std::vector<int> word = out[cur].word;
      word.push_back(g);
      seen.emplace(m, out.size());
      out.push_back(make_element(ctx, std::move(m), std::move(word)));
      queue.push_back(out.size() - 1);
    }
  }
  return out;
}

}  // namespace

Family family_from_string(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "E6") return Family::E6;
  if (s == "E7") return Family::E7;
  if (s == "E8") return Family::E8;
  if (s == "F4") return Family::F4;
  if (s == "G2") return Family::G2;
  throw PreconditionError("unknown root-system family: " + s);
}

std::string family_to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  return "?";
}

double RootSystem::inner(const Vec& a, const Vec& b) const {
  double s = 0.0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += a[i] * gram[i * rank + j] * b[j];
  return s;
}

Cplx RootSystem::inner(const CVec& a, const CVec& b) const {
  Cplx s = 0.0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += a[i] * gram[i * rank + j] * b[j];
  return s;
}

Cplx RootSystem::inner(const CVec& a, const Vec& b) const {
  Cplx s = 0.0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += a[i] * gram[i * rank + j] * b[j];
  return s;
}

std::string RootSystem::label() const { return family_to_string(family) + std::to_string(rank); }

int RootSystem::find_root(const Vec& v) const {
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (vec_eq(roots[i], v)) return static_cast<int>(i);
  return -1;
}

bool RootSystem::is_positive_root_index(int idx) const {
  for (std::size_t p = 0; p < positive_roots.size(); ++p)
    if (vec_eq(positive_roots[p], roots[idx])) return true;
  return false;
}

RootSystem build_root_system(Family family, int rank) {
  validate_family_rank(family, rank);

  std::vector<Vec> simple_ambient;
  int ambient_dim = rank;
  int expected = expected_root_count(family, rank);
  switch (family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::D:
      simple_ambient = classical_simple_roots(family, rank, &ambient_dim);
      break;
    case Family::E6: {
      auto t = tables::e6_table();
      simple_ambient = t.simple_roots;
      ambient_dim = t.ambient_dim;
      break;
    }
    case Family::E7: {
      auto t = tables::e7_table();
      simple_ambient = t.simple_roots;
      ambient_dim = t.ambient_dim;
      break;
    }
    case Family::E8: {
      auto t = tables::e8_table();
      simple_ambient = t.simple_roots;
      ambient_dim = t.ambient_dim;
      break;
    }
    case Family::F4: {
      auto t = tables::f4_table();
      simple_ambient = t.simple_roots;
      ambient_dim = t.ambient_dim;
      break;
    }
    case Family::G2: {
      auto t = tables::g2_table();
      simple_ambient = t.simple_roots;
      ambient_dim = t.ambient_dim;
      break;
    }
  }
  (void)ambient_dim;

  std::vector<Vec> all_ambient = closure(simple_ambient);
  if (static_cast<int>(all_ambient.size()) != expected)
    throw std::logic_error("root closure count mismatch for " + family_to_string(family) +
                           std::to_string(rank) + ": got " + std::to_string(all_ambient.size()));

  auto basis = orthonormal_basis(simple_ambient);

  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  rs.gram.assign(rank * rank, 0.0);
  for (int i = 0; i < rank; ++i) rs.gram[i * rank + i] = 1.0;
  for (const auto& s : simple_ambient) rs.simple_roots.push_back(project(basis, s));

  for (const auto& v : all_ambient) {
    auto c = simple_coefficients(simple_ambient, v);
    auto ci = round_coeffs(c);
    bool nonneg = std::all_of(ci.begin(), ci.end(), [](int x) { return x >= 0; });
    bool nonpos = std::all_of(ci.begin(), ci.end(), [](int x) { return x <= 0; });
    if (!nonneg && !nonpos) throw std::logic_error("root with mixed-sign coefficients");
    Vec proj = project(basis, v);
    rs.roots.push_back(proj);
    if (nonneg) {
      rs.positive_roots.push_back(proj);
      rs.positive_coeffs.push_back(ci);
    }
  }
  if (rs.positive_roots.size() * 2 != rs.roots.size())
    throw std::logic_error("positive roots are not half of all roots");

  // Reducedness: 2*alpha must never be a root.
  for (const auto& a : rs.positive_roots) {
    Vec twice(a);
    for (auto& x : twice) x *= 2.0;
    if (rs.find_root(twice) >= 0)
      throw PreconditionError("non-reduced root system requested");
  }
  return rs;
}

RootSystem build_root_system(const std::string& family, int rank) {
  return build_root_system(family_from_string(family), rank);
}

ThetaSet ThetaSet::full(int rank) {
  ThetaSet t;
  for (int i = 0; i < rank; ++i) t.indices.push_back(i);
  return t;
}

ThetaSet ThetaSet::empty_set() { return ThetaSet{}; }

ThetaSet ThetaSet::of(std::vector<int> zero_based, int rank) {
  std::sort(zero_based.begin(), zero_based.end());
  zero_based.erase(std::unique(zero_based.begin(), zero_based.end()), zero_based.end());
  for (int i : zero_based)
    if (i < 0 || i >= rank) throw PreconditionError("ThetaSet index out of range");
  ThetaSet t;
  t.indices = std::move(zero_based);
  return t;
}

bool ThetaSet::contains(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

bool ThetaSet::is_full(int rank) const { return static_cast<int>(indices.size()) == rank; }

std::string ThetaSet::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? "," : "") << (indices[i] + 1);
  os << "}";
  return os.str();
}

int WeylElement::rank() const {
  return static_cast<int>(std::sqrt(static_cast<double>(mat_onb.size())) + 0.5);
}

Vec WeylElement::apply(const Vec& v) const {
  const int r = rank();
  Vec out(r, 0.0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out[i] += mat_onb[i * r + j] * v[j];
  return out;
}

CVec WeylElement::apply(const CVec& v) const {
  const int r = rank();
  CVec out(r, Cplx(0.0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out[i] += mat_onb[i * r + j] * v[j];
  return out;
}

bool WeylElement::is_identity() const {
  const int r = rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (mat_root[i * r + j] != (i == j ? 1 : 0)) return false;
  return true;
}

std::vector<WeylElement> weyl_group(const RootSystem& rs, std::size_t cap) {
  std::vector<int> gens(rs.rank);
  for (int i = 0; i < rs.rank; ++i) gens[i] = i;
  return bfs_group(rs, gens, cap);
}

std::vector<WeylElement> weyl_subgroup(const RootSystem& rs, const ThetaSet& th, std::size_t cap) {
  return bfs_group(rs, th.indices, cap);
}

std::vector<int> complement_positive_indices(const RootSystem& rs, const ThetaSet& th) {
  std::vector<int> out;
  for (std::size_t p = 0; p < rs.positive_roots.size(); ++p) {
    bool inside = true;
    for (int j = 0; j < rs.rank; ++j)
      if (rs.positive_coeffs[p][j] != 0 && !th.contains(j)) inside = false;
    if (!inside) out.push_back(static_cast<int>(p));
  }
  return out;
}

Parabolic parabolic(const RootSystem& rs, const ThetaSet& th, std::size_t cap) {
  Parabolic par;
  par.subgroup = weyl_subgroup(rs, th, cap);
  par.complement_positive = complement_positive_indices(rs, th);
  for (std::size_t p = 0; p < rs.positive_roots.size(); ++p)
    if (std::find(par.complement_positive.begin(), par.complement_positive.end(),
                  static_cast<int>(p)) == par.complement_positive.end())
      par.theta_positive.push_back(static_cast<int>(p));

  auto all = weyl_group(rs, cap);
  const int r = rs.rank;
  // Canonical key of the right coset W_Theta * w: minimal u*w over u in W_Theta.
  std::map<std::vector<int>, std::size_t> best;  // key -> index into `all`
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::vector<int> key;
    for (const auto& u : par.subgroup) {
      auto m = mat_mul(u.mat_root, all[i].mat_root, r);
      if (key.empty() || m < key) key = std::move(m);
    }
    auto it = best.find(key);
    if (it == best.end()) {
      best.emplace(std::move(key), i);
    } else {
      const auto& cur = all[it->second];
      if (all[i].word.size() < cur.word.size()) it->second = i;
    }
  }
  if (best.size() * par.subgroup.size() != all.size())
    throw std::logic_error("coset decomposition count mismatch");
  for (const auto& [key, idx] : best) par.coset_reps.push_back(all[idx]);
  std::sort(par.coset_reps.begin(), par.coset_reps.end(),
            [](const WeylElement& a, const WeylElement& b) {
              if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
              return a.mat_root < b.mat_root;
            });

  // W_Theta must stabilize Sigma^+ \ <Theta>^+.
  for (const auto& u : par.subgroup) {
    for (int p : par.complement_positive) {
      Vec img = u.apply(rs.positive_roots[p]);
      bool found = false;
      for (int q : par.complement_positive)
        if (vec_eq(img, rs.positive_roots[q])) found = true;
      if (!found) throw std::logic_error("W_Theta does not stabilize the complement roots");
    }
  }
  return par;
}

Vec LatticeVector::to_vector(const RootSystem& rs) const {
  Vec out(rs.rank, 0.0);
  for (int j = 0; j < rs.rank; ++j)
    for (int i = 0; i < rs.rank; ++i) out[i] += coeffs[j] * rs.simple_roots[j][i];
  return out;
}

std::vector<LatticeVector> lattice_enumerate(const RootSystem& rs, int max_height,
                                             std::size_t cap) {
  if (max_height < 0) throw PreconditionError("lattice_enumerate: max_height must be >= 0");
  std::vector<LatticeVector> out;
  std::vector<int> cur(rs.rank, 0);
  // Enumerate per height slab in lexicographic order.
  for (int h = 0; h <= max_height; ++h) {
    std::function<void(int, int)> rec = [&](int pos, int rem) {
      if (out.size() > cap) throw PreconditionError("lattice_enumerate: count cap exceeded");
      if (pos == rs.rank - 1) {
        cur[pos] = rem;
        out.push_back(LatticeVector{cur, h});
        return;
      }
      for (int v = rem; v >= 0; --v) {
        cur[pos] = v;
        rec(pos + 1, rem - v);
      }
    };
    rec(0, h);
  }
  return out;
}

Cplx lambda_alpha(const RootSystem& rs, const CVec& lam, const Vec& alpha) {
  return rs.inner(lam, alpha) / rs.inner(alpha, alpha);
}

double lambda_alpha(const RootSystem& rs, const Vec& lam, const Vec& alpha) {
  return rs.inner(lam, alpha) / rs.inner(alpha, alpha);
}

bool a_theta_contains(const RootSystem& rs, const ThetaSet& th, const Vec& H) {
  for (int p : complement_positive_indices(rs, th))
    if (dot(rs.positive_roots[p], H) <= 0.0) return false;
  return true;
}

bool is_dominant(const RootSystem& rs, const Vec& H, double margin) {
  for (const auto& a : rs.simple_roots)
    if (dot(a, H) <= margin) return false;
  return true;
}

std::pair<Vec, int> to_dominant(const RootSystem& rs, const Vec& H) {
  Vec cur(H);
  int det = 1;
  for (int guard = 0; guard < 10000; ++guard) {
    int neg = -1;
    for (int i = 0; i < rs.rank; ++i)
      if (dot(rs.simple_roots[i], cur) < -kTol) { neg = i; break; }
    if (neg < 0) return {cur, det};
    double c = 2.0 * dot(cur, rs.simple_roots[neg]) / dot(rs.simple_roots[neg], rs.simple_roots[neg]);
    for (int i = 0; i < rs.rank; ++i) cur[i] -= c * rs.simple_roots[neg][i];
    det = -det;
  }
  throw std::logic_error("to_dominant did not converge");
}

}  // namespace thetasph::roots
