#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qrea/coeff/ratfunc.hpp"

namespace qrea {

/// A word in the generators, packed so that integer comparison is length-lex
/// order: the length sits in the top four bits and letters follow from the most
/// significant end. Letters are generator indices 0..15.
using Word = std::uint64_t;

namespace word {

constexpr int kMaxLength = 15;

inline int length(Word w) { return static_cast<int>(w >> 60); }
inline int letter(Word w, int p) { return static_cast<int>((w >> (56 - 4 * p)) & 0xF); }
Word make(const std::vector<int>& letters);
std::vector<int> letters(Word w);
Word single(int g);
Word concat(Word a, Word b);
/// Letters [from, from + len).
Word sub(Word w, int from, int len);
inline Word empty() { return 0; }
/// True when the letters are non-decreasing.
bool is_sorted(Word w);

}  // namespace word

struct WordPairHash {
  std::size_t operator()(const std::pair<Word, Word>& p) const {
    return std::hash<Word>()(p.first) * 0x9E3779B97F4A7C15ULL ^ std::hash<Word>()(p.second);
  }
};

/// Generator X_ij (or Z_ij) for an N x N matrix, 1-based i, j, row-major index.
inline int gen_index(int N, int i, int j) { return (i - 1) * N + (j - 1); }
inline int gen_row(int N, int g) { return g / N + 1; }
inline int gen_col(int N, int g) { return g % N + 1; }

/// Word with row sequence `rows` and column sequence `cols`.
Word word_from_indices(int N, const std::vector<int>& rows, const std::vector<int>& cols);
std::vector<int> word_rows(int N, Word w);
std::vector<int> word_cols(int N, Word w);

/// Noncommutative polynomial over RatFunc; zero coefficients are never stored.
class NCPoly {
 public:
  using Map = std::unordered_map<Word, RatFunc>;

  NCPoly() = default;
  static NCPoly constant(const RatFunc& c);
  static NCPoly monomial(Word w, const RatFunc& c = RatFunc(1));

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  RatFunc coefficient(Word w) const;
  /// Words in increasing order.
  std::vector<Word> sorted_words() const;

  void add(Word w, const RatFunc& c);
  /// this += c * p
  void add_scaled(const NCPoly& p, const RatFunc& c);
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const RatFunc& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const RatFunc& c) { return a *= c; }
  /// Free (concatenation) product.
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

  /// Human-readable form such as "X11*X22 + (-q)*X12*X21", words in increasing order.
  std::string to_string(int N, char alphabet = 'X') const;
  nlohmann::json to_json(int N, char alphabet = 'X') const;
  static NCPoly from_json(int N, const nlohmann::json& j);

 private:
  Map terms_;
};

std::string generator_name(int N, int g, char alphabet = 'X');

}  // namespace qrea
