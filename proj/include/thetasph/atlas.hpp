#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetasph/rootsys.hpp"

namespace thetasph::atlas {

enum class Klass { Riemannian, NCC, KepsII };

std::string klass_to_string(Klass k);
Klass klass_from_string(const std::string& s);

// One row of the appendix tables.  Parameterized families keep their rank and
// multiplicity symbolic ("n-1", "2n"); concretize() instantiates them.
struct SymmetricPairRecord {
  std::string g_label;
  std::string h_label;
  std::string fixed_algebra_label;  // g^{theta theta_eps}; empty for Riemannian rows
  std::string sigma_family;         // A, B, C, D, E6, E7, E8, F4, G2
  std::string rank_expr;            // e.g. "n-1", "n", "2", "1"
  std::string multiplicity_expr;    // e.g. "2", "4", "8", "2n"
  Klass klass = Klass::Riemannian;
  std::string parameter_constraints;  // e.g. "n>=2, 1<=j<=[n/2]"
  std::string notes;

  bool parameterized() const;  // depends on n (and possibly j)
  // Literal multiplicity when the expression is a constant.
  std::optional<int> literal_multiplicity() const;
  std::optional<int> literal_rank() const;
};

struct ConcretePair {
  std::string g_label;
  std::string h_label;
  std::string fixed_algebra_label;
  std::string sigma_family;
  int rank = 0;
  int multiplicity = 0;
};

// Substitutes concrete n (and j where applicable) into a family row.
ConcretePair concretize(const SymmetricPairRecord& rec, int n, int j = 1);

struct IsomorphismRecord {
  std::string left_pair;
  std::string right_pair;
  Klass context;
};

struct Atlas {
  std::vector<SymmetricPairRecord> records;
  std::vector<IsomorphismRecord> isomorphisms;
};

// Loads the embedded tables; verifies the record counts (12/10/11) and the
// data checksum.  Throws on mismatch.
const Atlas& load_atlas();

struct QueryFilter {
  std::optional<Klass> klass;
  std::optional<std::string> sigma_family;
  std::optional<int> multiplicity;  // matches literal multiplicities only
  std::optional<int> rank;          // matches literal ranks only
};

std::vector<SymmetricPairRecord> query(const QueryFilter& f);

// Theta policy per the classification: Riemannian rows use Theta = Pi; NCC
// rows admit the candidates Pi \ {beta} (the tables do not pin beta); KepsII
// rows get no hint.
struct ThetaHint {
  std::vector<roots::ThetaSet> candidates;
  bool beta_unpinned = false;
  std::string note;
};

ThetaHint theta_hint(const SymmetricPairRecord& rec, int concrete_rank);

std::uint64_t atlas_checksum();

}  // namespace thetasph::atlas
