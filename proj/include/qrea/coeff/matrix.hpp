#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qrea/coeff/ratfunc.hpp"

namespace qrea {

/// Dense row-major matrix over RatFunc with exact Gauss-Jordan elimination.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RatFunc& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const RatFunc& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y);
  friend bool operator==(const RatMatrix& x, const RatMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  /// Reduced row echelon form in place; returns the pivot column of each nonzero row.
  std::vector<std::size_t> rref();
  /// Inverse, or nullopt when singular.
  std::optional<RatMatrix> inverse() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<RatFunc> a_;
};

/// Rank of a matrix over the prime field F_p, rows given densely.
std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p);

/// Image of a rational number in F_p. Throws PoleAtPoint if p divides the denominator.
std::uint64_t to_mod_p(const Rational& r, std::uint64_t p);

}  // namespace qrea
