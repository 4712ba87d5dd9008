#pragma once

#include <array>
#include <memory>
#include <string>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "qrea/combinatorics/index_set.hpp"
#include "qrea/qmatrix/frt.hpp"

namespace qrea {

/// The coquasitriangular bicharacter r on words and minors, together with
/// its convolution inverses:
///   r_inv   satisfies sum r(a1, b1) r_inv(a2, b2) = e(a) e(b),
///   r_prime satisfies sum r(a1, b2) r_prime(a2, b1) = e(a) e(b).
///
/// On generators both inverses come from finite linear solves. On longer words
/// they are extended by the anti-multiplicative rules
///   f(x y, c) = f(y, c1) f(x, c2),   f(a, b c) = f(a1, b) f(a2, c),
/// which the tests certify against direct block solves and by re-substitution.
/// On minors the inverses are solved directly on the minor subcoalgebra.
class Bicharacter {
 public:
  enum class Kind { R, RInv, RPrime };

  explicit Bicharacter(int N);

  int N() const { return N_; }

  RatFunc r(Word a, Word c) const { return eval(Kind::R, a, c); }
  RatFunc r_inv(Word a, Word c) const { return eval(Kind::RInv, a, c); }
  RatFunc r_prime(Word a, Word c) const { return eval(Kind::RPrime, a, c); }
  RatFunc eval(Kind kind, Word a, Word c) const;
  /// Bilinear extension to polynomials.
  RatFunc eval(Kind kind, const NCPoly& a, const NCPoly& c) const;

  /// Minor-level values f(X_{A,B}, X_{C,D}); the inverses use the minor solve.
  RatFunc minor(Kind kind, IndexSet A, IndexSet B, IndexSet C, IndexSet D) const;
  /// Minor-level values from the word-level recursion on minor expansions.
  RatFunc minor_by_words(Kind kind, IndexSet A, IndexSet B, IndexSet C, IndexSet D) const;

  /// r_inv or r_prime on a word pair by solving the whole content block of its bidegree.
  RatFunc solve_on_words(Kind kind, Word a, Word c) const;

 private:
  RatFunc generator_value(Kind kind, int g1, int g2) const;
  void solve_minor_block(Kind kind, int k, int l) const;

  int N_;
  const QuantumMatrixAlgebra* alg_;
  std::vector<RatFunc> gen_inv_, gen_prime_;

  using PairHash = WordPairHash;
  struct Memo {
    std::shared_mutex mu;
    std::unordered_map<std::pair<Word, Word>, RatFunc, PairHash> map;
  };
  mutable std::array<Memo, 3> memo_;
  mutable std::shared_mutex table_mu_;
  // Minor values keyed by kind and the packed bits of A, B, C, D.
  mutable std::array<std::unordered_map<std::uint64_t, RatFunc>, 3> minor_values_;
  mutable std::array<std::vector<bool>, 3> minor_solved_;
  // Word-level block solves: solved block keys and the resulting values.
  mutable std::array<std::unordered_map<std::pair<Word, Word>, RatFunc, PairHash>, 3> solved_values_;
  mutable std::array<std::unordered_map<std::string, bool>, 3> solved_blocks_;
};

const Bicharacter& bicharacter(int N);

/// Re-substitution certificate for an inverse on all word pairs of the given bidegree.
struct ConvolutionReport {
  std::size_t pairs_checked = 0;
  std::size_t failures = 0;
  bool ok() const { return failures == 0; }
};
ConvolutionReport check_convolution_inverse(const Bicharacter& b, Bicharacter::Kind kind, int d, int e);
/// The same identity on the minor subcoalgebra for sizes k and l.
ConvolutionReport check_minor_convolution_inverse(const Bicharacter& b, Bicharacter::Kind kind, int k, int l);

}  // namespace qrea
