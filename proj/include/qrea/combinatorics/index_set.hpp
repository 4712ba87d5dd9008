#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace qrea {

/// Subset of {1, ..., 31} stored as a bitmask (bit i-1 marks element i).
class IndexSet {
 public:
  constexpr IndexSet() = default;
  IndexSet(std::initializer_list<int> elems);
  static IndexSet from_bits(std::uint32_t bits) {
    IndexSet s;
    s.bits_ = bits;
    return s;
  }
  static IndexSet from_vector(const std::vector<int>& elems);
  /// {1, ..., n}
  static IndexSet range(int n) { return from_bits(n <= 0 ? 0u : (n >= 32 ? ~0u : (1u << n) - 1u)); }

  std::uint32_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int i) const { return i >= 1 && i <= 31 && ((bits_ >> (i - 1)) & 1u); }
  int max() const { return empty() ? 0 : 32 - std::countl_zero(bits_); }
  int min() const { return empty() ? 0 : std::countr_zero(bits_) + 1; }
  /// Element at 1-based position p in increasing order (the i_p of the text).
  int at(int p) const;
  /// 1-based position of element i, or 0 when absent.
  int position(int i) const;
  std::vector<int> elements() const;
  int weight() const;

  IndexSet operator|(IndexSet o) const { return from_bits(bits_ | o.bits_); }
  IndexSet operator&(IndexSet o) const { return from_bits(bits_ & o.bits_); }
  IndexSet operator-(IndexSet o) const { return from_bits(bits_ & ~o.bits_); }
  IndexSet operator^(IndexSet o) const { return from_bits(bits_ ^ o.bits_); }
  bool subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }

  friend bool operator==(IndexSet a, IndexSet b) { return a.bits_ == b.bits_; }
  /// Storage order, for use as a map key only. Not the lexicographic order.
  friend bool operator<(IndexSet a, IndexSet b) { return a.bits_ < b.bits_; }

  std::string to_string() const;
  nlohmann::json to_json() const;
  static IndexSet from_json(const nlohmann::json& j);

 private:
  std::uint32_t bits_ = 0;
};

enum class Dominance { LessEq, GreaterEq, Equal, Incomparable };

/// Lexicographic comparison of equal-size sets. Throws SizeMismatch.
std::strong_ordering lex_cmp(IndexSet a, IndexSet b);
/// Lexicographic comparison of pairs (J, I): J decides first.
std::strong_ordering lex_cmp_pair(std::pair<IndexSet, IndexSet> a, std::pair<IndexSet, IndexSet> b);
/// Componentwise comparison of equal-size sets. Throws SizeMismatch.
Dominance dom_cmp(IndexSet a, IndexSet b);
/// a strictly below b in the dominance order.
bool dom_less(IndexSet a, IndexSet b);
/// (J, I) strictly below (J', I') in the pair extension of the dominance order.
bool dom_less_pair(std::pair<IndexSet, IndexSet> a, std::pair<IndexSet, IndexSet> b);

/// Returns (I_K, I^K). Throws PositionOutOfRange unless K is a subset of [|I|].
std::pair<IndexSet, IndexSet> subselect(IndexSet I, IndexSet K);
/// The K with I_K = sub; throws PositionOutOfRange if sub is not a subset of I.
IndexSet positions_of(IndexSet I, IndexSet sub);

/// All subsets of [n] with k elements, in lexicographic order.
const std::vector<IndexSet>& combinations(int n, int k);
/// All k-subsets of the given set, in lexicographic order.
std::vector<IndexSet> combinations_of(IndexSet s, int k);

/// A bijection between two index sets of equal size, stored positionally:
/// images[p-1] is the image of the p-th smallest domain element.
class Bijection {
 public:
  Bijection(IndexSet domain, IndexSet codomain, std::vector<int> images);
  static Bijection identity(IndexSet s);

  IndexSet domain() const { return domain_; }
  IndexSet codomain() const { return codomain_; }
  const std::vector<int>& images() const { return images_; }
  int operator()(int i) const;

  /// sigma after tau: x -> sigma(tau(x)).
  Bijection compose_after(const Bijection& tau) const;

 private:
  IndexSet domain_;
  IndexSet codomain_;
  std::vector<int> images_;
};

int inversions(const Bijection& sigma);
/// Inversions of a sequence of distinct integers.
int inversions(const std::vector<int>& seq);

/// Outcome of the exhaustive check of the partition lemma for one (I, J).
struct CombLemmaReport {
  IndexSet I, J;
  std::vector<IndexSet> admissible;            // all P meeting both inequalities
  std::optional<IndexSet> counterexample;      // an admissible P with a strict inequality
  bool ok() const { return !counterexample.has_value(); }
};

CombLemmaReport check_comb_lemma(IndexSet I, IndexSet J);

}  // namespace qrea
