#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qrea/coeff/ratfunc.hpp"

namespace qrea {

// A pure tensor e_{a_1} (x) ... (x) e_{a_d} is keyed by its index sequence
// packed four bits per slot (slot p in bits 4p..4p+3). Indices run 1..15.
namespace seq {

inline int get(std::uint64_t key, int pos) { return static_cast<int>((key >> (4 * pos)) & 0xF); }
inline std::uint64_t set(std::uint64_t key, int pos, int value) {
  return (key & ~(0xFULL << (4 * pos))) | (static_cast<std::uint64_t>(value) << (4 * pos));
}
std::uint64_t pack(const std::vector<int>& idx);
std::vector<int> unpack(std::uint64_t key, int degree);
/// Concatenation: a (degree da) followed by b.
inline std::uint64_t concat(std::uint64_t a, int da, std::uint64_t b) { return a | (b << (4 * da)); }
/// Slots [from, from + len).
inline std::uint64_t slice(std::uint64_t key, int from, int len) {
  std::uint64_t mask = len >= 16 ? ~0ULL : ((1ULL << (4 * len)) - 1);
  return (key >> (4 * from)) & mask;
}

}  // namespace seq

/// Element of (C^N)^{(x) d} over RatFunc, sparse in the pure-tensor basis.
struct Tensor {
  int degree = 0;
  std::unordered_map<std::uint64_t, RatFunc> coeffs;

  void add(std::uint64_t key, const RatFunc& c);
  void scale(const RatFunc& c);
  bool is_zero() const { return coeffs.empty(); }
  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  friend bool operator==(const Tensor& a, const Tensor& b);
  /// Tensor product a (x) b.
  static Tensor product(const Tensor& a, const Tensor& b);
  static Tensor basis(const std::vector<int>& idx);
};

}  // namespace qrea
