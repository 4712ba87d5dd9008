#pragma once

#include <map>
#include <random>
#include <vector>

#include "qrea/classical/hermitian.hpp"

namespace qrea {

/// Polynomial in the commuting coordinates Z_ij (index gen_index(N, i, j))
/// with Gaussian-rational coefficients. A monomial is its sorted index list.
class CommPoly {
 public:
  using Monomial = std::vector<int>;

  static CommPoly variable(int g);
  static CommPoly constant(const GaussRat& c);

  const std::map<Monomial, GaussRat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(Monomial m, const GaussRat& c);
  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  friend CommPoly operator*(CommPoly a, const GaussRat& c);
  friend bool operator==(const CommPoly& a, const CommPoly& b) { return a.terms_ == b.terms_; }

  CommPoly derivative(int g) const;
  /// point[g] is the value of coordinate g.
  Complex evaluate(const std::vector<Complex>& point) const;
  std::string to_string(int N) const;

 private:
  std::map<Monomial, GaussRat> terms_;
};

/// Entry of i X^RE on e_ij (x) e_kl, that is i {Z_ij, Z_kl}, read from
/// r21 (z(x)z) - (z(x)z) r + (z(x)1) r (1(x)z) - (1(x)z) r21 (z(x)1).
CommPoly bivector_entry(int N, int i, int j, int k, int l);
/// {Z_ij, Z_kl} itself.
CommPoly re_bracket(int N, int i, int j, int k, int l);

/// Real coordinates on H(N): z_ii, then for i < j the pair
/// sqrt2 Re z_ij, sqrt2 Im z_ij, in row-major order of (i, j).
std::vector<double> real_coordinates(const CMatrix& z);
struct BivectorReport {
  Eigen::MatrixXd pi;        // {c_a, c_b} at z
  double antisymmetry = 0;   // max |pi + pi^T| before symmetrization
  double imaginary = 0;      // max imaginary part of the complex evaluation
};
BivectorReport poisson_bivector(const CMatrix& z);

struct TangencyReport {
  int dim_range = 0, dim_u = 0, dim_t = 0, dim_intersection = 0;
  bool range_in_u = false, range_in_t = false;
  double antisymmetry = 0;
  bool ok() const { return range_in_u && range_in_t && dim_range == dim_intersection; }
  nlohmann::json to_json() const;
};

/// Range of the bivector against the tangent spaces of the U(N) and T(N)
/// orbits at z. Throws IllConditioned if a singular value sits too close to
/// the rank threshold.
TangencyReport leaf_tangency_check(const CMatrix& z, double tol = 1e-8);

struct JacobiReport {
  int N = 0;
  int samples = 0;
  bool symbolic_zero = false;  // every cyclic sum vanishes as a polynomial
  double max_residual = 0;     // over random Hermitian points and all coordinate triples
  nlohmann::json to_json() const;
};

JacobiReport jacobi_check(int N, int samples, std::mt19937_64& rng);

}  // namespace qrea
