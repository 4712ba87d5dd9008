#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qrea/coeff/gaussrat.hpp"
#include "qrea/combinatorics/index_set.hpp"

namespace qrea {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

/// Square matrix over the Gaussian rationals, 0-based (i, j) access.
class GaussMatrix {
 public:
  GaussMatrix() = default;
  explicit GaussMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n)) {}
  static GaussMatrix identity(int n);

  int size() const { return n_; }
  GaussRat& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const GaussRat& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }

  GaussMatrix adjoint() const;
  bool is_hermitian() const;
  bool is_upper_triangular() const;
  friend GaussMatrix operator*(const GaussMatrix& a, const GaussMatrix& b);
  friend bool operator==(const GaussMatrix& a, const GaussMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

  /// Determinant of the submatrix on 1-based rows R and columns C.
  GaussRat minor(IndexSet R, IndexSet C) const;
  CMatrix to_complex() const;

 private:
  int n_ = 0;
  std::vector<GaussRat> a_;
};

/// A self-adjoint matrix held exactly or in floating point.
struct HermitianMatrix {
  enum class Mode { Exact, Numeric };

  Mode mode = Mode::Exact;
  GaussMatrix exact;
  CMatrix numeric;

  static HermitianMatrix from_exact(GaussMatrix m);
  static HermitianMatrix from_numeric(CMatrix m);

  int N() const { return mode == Mode::Exact ? exact.size() : static_cast<int>(numeric.rows()); }
  bool is_exact() const { return mode == Mode::Exact; }
  /// The floating value in either mode.
  CMatrix value() const { return is_exact() ? exact.to_complex() : numeric; }

  /// {"N", "mode", "entries": [[{"re", "im"}, ...], ...]}. Exact entries are
  /// "p/q" strings; numeric entries are numbers or decimal strings.
  nlohmann::json to_json() const;
  /// Throws ParseError on malformed input and IllFormedInstance when the matrix
  /// is not self-adjoint (exactly, or within 1e-12 in numeric mode).
  static HermitianMatrix from_json(const nlohmann::json& j);
};

/// Ascending eigenvalues of a self-adjoint matrix.
std::vector<double> eigenvalues(const CMatrix& z);

}  // namespace qrea
