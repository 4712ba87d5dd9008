#pragma once

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "qrea/qmatrix/ncpoly.hpp"

namespace qrea {

/// Quadratic rewriting system: each descent g1 g2 (g1 > g2) rewrites to a
/// combination of sorted words g g' (g <= g'). Normal words are the sorted words.
class RewriteSystem {
 public:
  struct Term {
    int a, b;
    RatFunc c;
  };

  /// Row-reduces the homogeneous degree-2 relations with the greatest word as pivot.
  /// Throws NonOrientable if a pivot is not a descent, FlatnessCheckFailed if some
  /// descent has no rule.
  static RewriteSystem from_relations(int num_generators, const std::vector<NCPoly>& relations);

  int num_generators() const { return n_; }
  std::size_t num_rules() const;
  /// Right-hand side of the rule for g1 g2, empty for a sorted pair.
  const std::vector<Term>& rule(int g1, int g2) const { return rules_[static_cast<std::size_t>(g1 * n_ + g2)]; }
  NCPoly rule_rhs(int g1, int g2) const;

  NCPoly normal_form(Word w) const;
  NCPoly normal_form(const NCPoly& p) const;
  /// Normal form of u * v where v is a sorted word.
  NCPoly insert_word(Word u, Word v) const;
  /// Product of two polynomials already in normal form.
  NCPoly multiply(const NCPoly& a, const NCPoly& b) const;

  enum class Strategy { Leftmost, Rightmost };
  /// Reduction applying one rule at a time at the chosen descent.
  NCPoly reduce(const NCPoly& p, Strategy s) const;

  /// The reduced relations g1 g2 - rhs, one per descent; same span as the input.
  const std::vector<NCPoly>& relations() const { return relations_; }

 private:
  NCPoly insert(int g, Word sorted) const;

  int n_ = 0;
  std::vector<std::vector<Term>> rules_;
  std::vector<NCPoly> relations_;
  struct Memo {
    std::shared_mutex mu;
    std::unordered_map<Word, NCPoly> insert;
  };
  std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

struct ConfluenceReport {
  std::size_t words_checked = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0; }
};

/// Compares leftmost, rightmost and insertion reduction on every word of the given degree.
/// At degree 3 this resolves every overlap ambiguity, which proves the PBW property.
ConfluenceReport check_confluence(const RewriteSystem& rs, int degree, int N, char alphabet = 'X');

struct DimensionReport {
  int degree = 0;
  std::uint64_t expected = 0;
  std::uint64_t quotient_dimension = 0;
  bool ok() const { return expected == quotient_dimension; }
};

/// Dimension of the degree-d part of the quotient of the free algebra by the
/// relations, specialized at q = q0 over F_p, against C(n + d - 1, d).
DimensionReport check_dimension(const RewriteSystem& rs, int degree, const Rational& q0,
                                std::uint64_t prime = 2305843009213693951ULL);

std::uint64_t binomial(int n, int k);

}  // namespace qrea
