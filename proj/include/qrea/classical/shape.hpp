#pragma once

#include <array>
#include <optional>
#include <random>
#include <vector>

#include "qrea/classical/hermitian.hpp"

namespace qrea {

/// A self-adjoint shape with concrete phases; S e_i = u_i e_{tau(i)}.
/// exact_u holds the phase whenever it is a Gaussian rational.
struct ShapeMatrix {
  std::vector<int> tau;
  std::vector<Complex> u;
  std::vector<std::optional<GaussRat>> exact_u;

  int N() const { return static_cast<int>(tau.size()); }
  IndexSet support() const;
  int rank() const { return support().size(); }
  bool fully_exact() const;
  CMatrix matrix() const;
  std::optional<GaussMatrix> exact_matrix() const;
  /// Counts of eigenvalue signs (+, -, 0).
  std::array<int, 3> signature() const;

  /// tau equal, phases equal exactly where both are exact and within tol otherwise.
  bool same_as(const ShapeMatrix& o, double tol = 1e-10) const;
  /// Throws IllFormedInstance unless tau is an involution, phases are unimodular,
  /// moved points carry nonzero phases and u_{tau(i)} = conj(u_i).
  void validate(double tol = 1e-10) const;

  /// {"tau": [...], "u": [{"re", "im"}, ...], "exact": bool}
  nlohmann::json to_json() const;
  /// Accepts u entries as {"re","im"} objects, numbers, or the strings
  /// "0", "1", "-1", "i", "-i", "p/q".
  static ShapeMatrix from_json(const nlohmann::json& j);
  static ShapeMatrix from_exact(std::vector<int> tau, std::vector<GaussRat> u);
};

/// Shape of z from its lex-first nonvanishing minors. In exact mode every
/// vanishing decision is exact; numeric mode treats |minor| <= tol * scale^k as zero.
/// Returns the empty shape for z = 0; throws InconsistentPivots if the pivots
/// fail to form a self-adjoint shape.
ShapeMatrix shape_of(const HermitianMatrix& z, double tol = 1e-9);

/// z = t^* S t with t upper triangular with positive diagonal, by symmetric
/// elimination. Works in floating point in both modes.
struct Decomposition {
  CMatrix t;
  ShapeMatrix shape;
  double residual = 0;
};
Decomposition decompose(const HermitianMatrix& z, double tol = 1e-10);

struct LeafLabel {
  ShapeMatrix shape;
  std::vector<double> weight;  // ascending
  nlohmann::json to_json() const;
};

LeafLabel leaf_label(const HermitianMatrix& z);
/// Sign counts of an eigenvalue list, with |x| <= tol counted as zero.
std::array<int, 3> weight_signature(const std::vector<double>& weight, double tol = 1e-12);

/// Enhanced shape with shape S and eigenvalues lambda: lambda entries on the
/// fixed points and 2x2 congruence blocks on the transpositions. Exact when
/// the phases are exact and every needed square root is rational. Throws
/// SignMismatch unless the signatures agree.
HermitianMatrix build_leaf_point(const ShapeMatrix& S, const std::vector<Rational>& lambda);
HermitianMatrix build_leaf_point(const ShapeMatrix& S, const std::vector<double>& lambda);

/// shape_of(t^* z t) equals shape_of(z). Throws NotTriangular unless t is upper
/// triangular with positive real diagonal.
bool tn_invariance_check(const GaussMatrix& z, const GaussMatrix& t);

/// t^* z t
GaussMatrix congruence(const GaussMatrix& z, const GaussMatrix& t);

namespace sample {

using Rng = std::mt19937_64;

/// Random self-adjoint shape whose phases are exact Gaussian rationals.
ShapeMatrix shape(int N, Rng& rng);
/// Random rational weight compatible with the signature of S.
std::vector<Rational> weight(const ShapeMatrix& S, Rng& rng);
/// Random exact enhanced shape with shape S.
GaussMatrix enhanced(const ShapeMatrix& S, Rng& rng);
/// Random upper triangular matrix with positive rational diagonal.
GaussMatrix triangular(int N, Rng& rng);
/// Elementary generator I + lambda e_{r,r+1}, random r and Gaussian rational lambda.
GaussMatrix elementary(int N, Rng& rng);
/// Diagonal matrix with random positive rational entries.
GaussMatrix diagonal(int N, Rng& rng);
/// t^* E t with E enhanced of shape S and t random triangular.
GaussMatrix hermitian_of_shape(const ShapeMatrix& S, Rng& rng);
/// Random Hermitian matrix with complex normal entries.
CMatrix numeric_hermitian(int N, Rng& rng);

}  // namespace sample

}  // namespace qrea
