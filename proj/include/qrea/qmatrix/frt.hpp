#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qrea/combinatorics/index_set.hpp"
#include "qrea/qmatrix/rewrite.hpp"

namespace qrea {

/// Entries of R X_1 X_2 - X_1 X_2 R as free polynomials in the X_ij.
std::vector<NCPoly> frt_relations(int N);

/// Degree-k minor X_{R,C} as a free polynomial: the coefficient of e_R in the
/// coaction applied to e_C.
NCPoly minor_expansion(int N, IndexSet rows, IndexSet cols);

/// The quantum matrix algebra with its rewriting system and cached minors.
class QuantumMatrixAlgebra {
 public:
  explicit QuantumMatrixAlgebra(int N);

  int N() const { return N_; }
  const RewriteSystem& rewriting() const { return rs_; }
  NCPoly nf(const NCPoly& p) const { return rs_.normal_form(p); }
  NCPoly mul(const NCPoly& a, const NCPoly& b) const { return rs_.multiply(a, b); }
  NCPoly generator(int i, int j) const { return NCPoly::monomial(word::single(gen_index(N_, i, j))); }

  /// Normal form of X_{rows,cols}; the empty minor is 1.
  const NCPoly& minor(IndexSet rows, IndexSet cols) const;
  /// Normal form of the product X_{A,B} X_{C,D}.
  const NCPoly& minor_product(IndexSet A, IndexSet B, IndexSet C, IndexSet D) const;
  const NCPoly& quantum_determinant() const { return minor(IndexSet::range(N_), IndexSet::range(N_)); }

 private:
  int N_;
  RewriteSystem rs_;
  std::vector<NCPoly> minors_;
  mutable std::shared_mutex prod_mu_;
  mutable std::unordered_map<std::uint64_t, NCPoly> products_;
};

const QuantumMatrixAlgebra& quantum_matrix_algebra(int N);

/// Elements of A (x) A as coefficients of word pairs.
using TensorPoly = std::map<std::pair<Word, Word>, RatFunc>;

TensorPoly coproduct(int N, const NCPoly& p);
RatFunc counit(int N, const NCPoly& p);

}  // namespace qrea
