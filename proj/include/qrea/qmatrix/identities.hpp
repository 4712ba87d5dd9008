#pragma once

#include <map>
#include <string>
#include <vector>

#include "qrea/certificate.hpp"
#include "qrea/combinatorics/index_set.hpp"
#include "qrea/parallel.hpp"
#include "qrea/qmatrix/ncpoly.hpp"

namespace qrea {

/// One instance of a minor identity: a family name and its named index sets.
struct IdentityInstance {
  std::string family;
  int N = 0;
  std::map<std::string, IndexSet> sets;

  IndexSet at(const std::string& name) const;
  nlohmann::json to_json() const;
  static IdentityInstance from_json(const std::string& family, int N, const nlohmann::json& j);
};

struct IdentitySides {
  NCPoly lhs, rhs;
};

/// Families in the quantum matrix algebra:
///   laplace-row, laplace-col  sets I, J, K, K'
///   muir, muir2               sets I, J, F, G, K, K'
///   braidcomm1, braidcomm2    sets I, J, I', J'
const std::vector<std::string>& matrix_identity_families();

/// Both sides in normal form. Throws IllFormedInstance on inconsistent sizes.
IdentitySides matrix_identity_sides(const IdentityInstance& inst);
Certificate verify_matrix_identity(const IdentityInstance& inst);

/// Every instance of the family at N with minor sizes up to max_k.
std::vector<IdentityInstance> matrix_identity_sweep(const std::string& family, int N, int max_k);

/// Runs verify on every instance with the given executor.
template <class Verify>
std::vector<Certificate> verify_all(const std::vector<IdentityInstance>& insts, Verify verify,
                                    Exec exec = Exec::Parallel) {
  return sweep<Certificate>(insts.size(), [&](std::size_t i) { return verify(insts[i]); }, exec);
}

/// Shared helpers for the identity families.
Certificate make_certificate(const IdentityInstance& inst, const IdentitySides& sides, char alphabet);
/// The sets X_F u (X^F)_K and X_F u (X^F)^K for positions F in X and K in X^F.
std::pair<IndexSet, IndexSet> extend_minor(IndexSet X, IndexSet F, IndexSet K);

}  // namespace qrea
