#pragma once

#include <shared_mutex>
#include <unordered_map>

#include "qrea/combinatorics/index_set.hpp"
#include "qrea/qmatrix/bicharacter.hpp"

namespace qrea {

/// The twisted product f * g = r(f1, g2) f2 g3 r'(f3, g1) on the quantum
/// matrix algebra, which realizes the reflection equation algebra with
/// Z_ij mapped to X_ij. Results are in normal form.
class StarProduct {
 public:
  explicit StarProduct(int N);

  int N() const { return N_; }
  const QuantumMatrixAlgebra& algebra() const { return *alg_; }

  /// Word-level product, with r' extended anti-multiplicatively.
  NCPoly words(Word f, Word g) const;
  NCPoly operator()(const NCPoly& f, const NCPoly& g) const;

  /// X_{A,B} * X_{C,D} through the minor coalgebra, with r' from the minor solve.
  const NCPoly& minors(IndexSet A, IndexSet B, IndexSet C, IndexSet D) const;

 private:
  int N_;
  const QuantumMatrixAlgebra* alg_;
  const Bicharacter* bc_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<std::uint64_t, NCPoly> minor_cache_;
  mutable std::unordered_map<std::pair<Word, Word>, NCPoly, WordPairHash> word_cache_;
};

const StarProduct& star_product(int N);

}  // namespace qrea
