#include "thetasph/atlas.hpp"

#include <algorithm>
#include <sstream>

namespace thetasph::atlas {

namespace {

SymmetricPairRecord rec(std::string g, std::string h, std::string fixed, std::string sigma,
                        std::string rank_expr, std::string mult, Klass k, std::string constraints,
                        std::string notes = "") {
  SymmetricPairRecord r;
  r.g_label = std::move(g);
  r.h_label = std::move(h);
  r.fixed_algebra_label = std::move(fixed);
  r.sigma_family = std::move(sigma);
  r.rank_expr = std::move(rank_expr);
  r.multiplicity_expr = std::move(mult);
  r.klass = k;
  r.parameter_constraints = std::move(constraints);
  r.notes = std::move(notes);
  return r;
}

Atlas build_atlas() {
  Atlas a;
  const Klass R = Klass::Riemannian, N = Klass::NCC, K2 = Klass::KepsII;

  // Table 1: Riemannian symmetric pairs with even multiplicities.
  a.records.push_back(rec("sl(n,C)", "su(n)", "", "A", "n-1", "2", R, "n>=2"));
  a.records.push_back(rec("so(2n+1,C)", "so(2n+1)", "", "B", "n", "2", R, "n>=2"));
  a.records.push_back(rec("sp(n,C)", "sp(n)", "", "C", "n", "2", R, "n>=3"));
  a.records.push_back(rec("so(2n,C)", "so(2n)", "", "D", "n", "2", R, "n>=4"));
  a.records.push_back(rec("e6(C)", "e6", "", "E6", "6", "2", R, ""));
  a.records.push_back(rec("e7(C)", "e7", "", "E7", "7", "2", R, ""));
  a.records.push_back(rec("e8(C)", "e8", "", "E8", "8", "2", R, ""));
  a.records.push_back(rec("f4(C)", "f4", "", "F4", "4", "2", R, ""));
  a.records.push_back(rec("g2(C)", "g2", "", "G2", "2", "2", R, ""));
  a.records.push_back(rec("su*(2n)", "sp(n)", "", "A", "n-1", "4", R, "n>=2"));
  a.records.push_back(rec("e6(-26)", "f4(-20)", "", "A", "2", "8", R, ""));
  a.records.push_back(rec("so(2n+1,1)", "so(2n+1)", "", "A", "1", "2n", R, "n>=3"));

  // Table 2: non-compactly causal (K_eps I) pairs.
  a.records.push_back(rec("sl(n,C)", "su(n-j,j)", "sl(n-j,C)+sl(j,C)+C", "A", "n-1", "2", N,
                          "n>=2, 1<=j<=[n/2]"));
  a.records.push_back(rec("so(2n+1,C)", "so(2n-1,2)", "so(2n-1,C)+C", "B", "n", "2", N, "n>=2"));
  a.records.push_back(rec("sp(n,C)", "sp(n,R)", "gl(n,C)", "C", "n", "2", N, "n>=3"));
  a.records.push_back(rec("so(2n,C)", "so(2n-2,2)", "so(2n-2,C)+C", "D", "n", "2", N, "n>=4"));
  a.records.push_back(rec("so(2n,C)", "so*(2n)", "gl(n,C)", "D", "n", "2", N, "n>=5"));
  a.records.push_back(rec("e6(C)", "e6(-14)", "so(10,C)+C", "E6", "6", "2", N, ""));
  a.records.push_back(rec("e7(C)", "e7(-25)", "e6(C)+C", "E7", "7", "2", N, ""));
  a.records.push_back(rec("su*(2n)", "sp(n-j,j)", "su*(2(n-j))+su*(2j)+R", "A", "n-1", "4", N,
                          "n>=2, 1<=j<=[n/2]"));
  a.records.push_back(rec("e6(-26)", "f4(-20)", "so(9,1)+R", "A", "2", "8", N, ""));
  a.records.push_back(rec("so(2n+1,1)", "so(2n,1)", "so(2n+1)+R", "A", "1", "2n", N, "n>=3"));

  // Table 3: the other (K_eps II) pairs.
  a.records.push_back(rec("so(2n+1,C)", "so(2(n-j)+1,2j)", "so(2(n-j)+1,C)+so(2j,C)", "B", "n",
                          "2", K2, "n>=2, 2<=j<=n"));
  a.records.push_back(rec("sp(n,C)", "sp(n-j,j)", "sp(n-j,C)+sp(j,C)", "C", "n", "2", K2,
                          "n>=3, 1<=j<=[n/2]"));
  a.records.push_back(rec("so(2n,C)", "so(2(n-j),2j)", "so(2(n-j),C)+so(2j,C)", "D", "n", "2", K2,
                          "n>=4, 2<=j<=[n/2]"));
  a.records.push_back(rec("e6(C)", "e6(2)", "sl(6,C)+sl(2,C)", "E6", "6", "2", K2, ""));
  a.records.push_back(rec("e7(C)", "e7(7)", "sl(8,C)", "E7", "7", "2", K2, ""));
  a.records.push_back(rec("e7(C)", "e7(-5)", "so(12,C)+sl(2,C)", "E7", "7", "2", K2, ""));
  a.records.push_back(rec("e8(C)", "e8(8)", "so(16,C)", "E8", "8", "2", K2, ""));
  a.records.push_back(rec("e8(C)", "e8(-24)", "e7(C)+sl(2,C)", "E8", "8", "2", K2, ""));
  a.records.push_back(rec("f4(C)", "f4(4)", "sp(3,C)+sl(2,C)", "F4", "4", "2", K2, ""));
  a.records.push_back(rec("f4(C)", "f4(-20)", "so(9,C)", "F4", "4", "2", K2, ""));
  a.records.push_back(rec("g2(C)", "g2(2)", "sl(2,C)+sl(2,C)", "G2", "2", "2", K2, ""));

  auto iso = [&](std::string l, std::string r, Klass k) {
    a.isomorphisms.push_back(IsomorphismRecord{std::move(l), std::move(r), k});
  };
  iso("so(3,C)=sp(1,C) ~ sl(2,C)", "so(3)=sp(1) ~ su(2)", Klass::Riemannian);
  iso("sp(2,C) ~ so(5,C)", "sp(2) ~ so(5)", Klass::Riemannian);
  iso("so(6,C) ~ sl(4,C)", "so(6) ~ su(4)", Klass::Riemannian);
  iso("so(3,1) ~ sl(2,C)", "so(3) ~ su(2)", Klass::Riemannian);
  iso("so(5,1) ~ su*(4)", "so(5) ~ sp(2)", Klass::Riemannian);
  iso("so(3,C)=sp(1,C) ~ sl(2,C)", "so(1,2)~sp(1,R) ~ su(1,1)", Klass::NCC);
  iso("sp(2,C) ~ so(5,C)", "sp(2,R) ~ so(3,2)", Klass::NCC);
  iso("so(6,C) ~ sl(4,C)", "so(4,2) ~ su(2,2)", Klass::NCC);
  iso("so(6,C) ~ sl(4,C)", "so*(6) ~ su(3,1)", Klass::NCC);
  iso("so(3,1) ~ sl(2,C)", "so(2,1) ~ su(1,1)", Klass::NCC);
  iso("so(5,1) ~ su*(4)", "so(4,1) ~ sp(1,1)", Klass::NCC);
  iso("so(8,C) = so(8,C)", "so*(8) ~ so(2,6)", Klass::NCC);
  iso("sp(2,C) ~ so(5,C)", "sp(1,1) ~ so(1,4)", Klass::KepsII);
  return a;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string serialize(const Atlas& a) {
  std::ostringstream os;
  for (const auto& r : a.records)
    os << r.g_label << '|' << r.h_label << '|' << r.fixed_algebra_label << '|' << r.sigma_family
       << '|' << r.rank_expr << '|' << r.multiplicity_expr << '|' << klass_to_string(r.klass)
       << '|' << r.parameter_constraints << '\n';
  for (const auto& i : a.isomorphisms)
    os << i.left_pair << '|' << i.right_pair << '|' << klass_to_string(i.context) << '\n';
  return os.str();
}

// Frozen at data-entry time; guards against accidental edits of the tables.
constexpr std::uint64_t kAtlasChecksum = 1076318708405907037ull;

}  // namespace

std::string klass_to_string(Klass k) {
  switch (k) {
    case Klass::Riemannian: return "riemannian";
    case Klass::NCC: return "ncc";
    case Klass::KepsII: return "keps2";
  }
  return "?";
}

Klass klass_from_string(const std::string& s) {
  if (s == "riemannian") return Klass::Riemannian;
  if (s == "ncc") return Klass::NCC;
  if (s == "keps2" || s == "kepsII") return Klass::KepsII;
  throw PreconditionError("unknown class: " + s);
}

bool SymmetricPairRecord::parameterized() const {
  return rank_expr.find('n') != std::string::npos ||
         multiplicity_expr.find('n') != std::string::npos ||
         h_label.find('j') != std::string::npos;
}

std::optional<int> SymmetricPairRecord::literal_multiplicity() const {
  if (multiplicity_expr.find('n') != std::string::npos) return std::nullopt;
  return std::stoi(multiplicity_expr);
}

std::optional<int> SymmetricPairRecord::literal_rank() const {
  if (rank_expr.find('n') != std::string::npos) return std::nullopt;
  return std::stoi(rank_expr);
}

namespace {

std::string substitute(std::string s, int n, int j) {
  // textual substitution of the parameter expressions appearing in the tables
  auto replace_all = [&](const std::string& from, const std::string& to) {
    std::size_t pos = 0;
    while ((pos = s.find(from, pos)) != std::string::npos) {
      s.replace(pos, from.size(), to);
      pos += to.size();
    }
  };
  replace_all("2(n-j)+1", std::to_string(2 * (n - j) + 1));
  replace_all("2(n-j)", std::to_string(2 * (n - j)));
  replace_all("2n+1", std::to_string(2 * n + 1));
  replace_all("2n", std::to_string(2 * n));
  replace_all("n-j", std::to_string(n - j));
  replace_all("2j", std::to_string(2 * j));
  replace_all("n", std::to_string(n));
  replace_all("j", std::to_string(j));
  return s;
}

int eval_expr(const std::string& expr, int n) {
  if (expr == "n") return n;
  if (expr == "n-1") return n - 1;
  if (expr == "2n") return 2 * n;
  return std::stoi(expr);
}

}  // namespace

ConcretePair concretize(const SymmetricPairRecord& r, int n, int j) {
  ConcretePair c;
  c.g_label = substitute(r.g_label, n, j);
  c.h_label = substitute(r.h_label, n, j);
  c.fixed_algebra_label = substitute(r.fixed_algebra_label, n, j);
  c.sigma_family = r.sigma_family;
  c.rank = eval_expr(r.rank_expr, n);
  c.multiplicity = eval_expr(r.multiplicity_expr, n);
  return c;
}

std::uint64_t atlas_checksum() { return fnv1a(serialize(build_atlas())); }

const Atlas& load_atlas() {
  static const Atlas atlas = [] {
    Atlas a = build_atlas();
    int counts[3] = {0, 0, 0};
    for (const auto& r : a.records) counts[static_cast<int>(r.klass)]++;
    if (counts[0] != 12 || counts[1] != 10 || counts[2] != 11)
      throw std::logic_error("atlas record counts are not 12/10/11");
    for (const auto& r : a.records) {
      auto lm = r.literal_multiplicity();
      if (lm && (*lm <= 0 || *lm % 2 != 0))
        throw std::logic_error("atlas record carries an odd multiplicity");
    }
    if (fnv1a(serialize(a)) != kAtlasChecksum)
      throw std::logic_error("embedded-data checksum mismatch");
    return a;
  }();
  return atlas;
}

std::vector<SymmetricPairRecord> query(const QueryFilter& f) {
  std::vector<SymmetricPairRecord> out;
  for (const auto& r : load_atlas().records) {
    if (f.klass && r.klass != *f.klass) continue;
    if (f.sigma_family && r.sigma_family != *f.sigma_family) continue;
    if (f.multiplicity) {
      auto lm = r.literal_multiplicity();
      if (!lm || *lm != *f.multiplicity) continue;
    }
    if (f.rank) {
      auto lr = r.literal_rank();
      if (!lr || *lr != *f.rank) continue;
    }
    out.push_back(r);
  }
  return out;
}

ThetaHint theta_hint(const SymmetricPairRecord& rec, int concrete_rank) {
  ThetaHint hint;
  switch (rec.klass) {
    case Klass::Riemannian:
      hint.candidates.push_back(roots::ThetaSet::full(concrete_rank));
      hint.note = "Riemannian: Theta = Pi";
      break;
    case Klass::NCC: {
      hint.beta_unpinned = true;
      for (int b = 0; b < concrete_rank; ++b) {
        std::vector<int> idx;
        for (int i = 0; i < concrete_rank; ++i)
          if (i != b) idx.push_back(i);
        hint.candidates.push_back(roots::ThetaSet::of(idx, concrete_rank));
      }
      hint.note = "NCC: |Pi \\ Theta| = 1; the classification does not pin beta";
      break;
    }
    case Klass::KepsII:
      hint.note = "K_eps II: signature machinery out of scope; no Theta hint";
      break;
  }
  return hint;
}

}  // namespace thetasph::atlas
