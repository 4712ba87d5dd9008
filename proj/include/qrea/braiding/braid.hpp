#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "qrea/braiding/tensor.hpp"
#include "qrea/combinatorics/index_set.hpp"

namespace qrea {

/// The braid operator on C^N (x) C^N and its inverse, stored column-wise:
/// column(a, b) lists the nonzero entries of R(e_a (x) e_b).
class BraidOperator {
 public:
  struct Entry {
    int a, b;
    RatFunc value;
  };

  explicit BraidOperator(int N);

  int N() const { return N_; }
  const std::vector<Entry>& column(int a, int b) const { return cols_[idx(a, b)]; }
  const std::vector<Entry>& inverse_column(int a, int b) const { return inv_cols_[idx(a, b)]; }
  /// Matrix entry <e_a (x) e_b, R(e_c (x) e_d)>.
  RatFunc entry(int a, int b, int c, int d) const;
  RatFunc inverse_entry(int a, int b, int c, int d) const;

  /// Applies R (or its inverse) to tensor slots pos, pos+1 (0-based).
  Tensor apply(const Tensor& t, int pos, bool inverse = false) const;

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>((a - 1) * N_ + (b - 1)); }

  int N_;
  std::vector<std::vector<Entry>> cols_;
  std::vector<std::vector<Entry>> inv_cols_;
};

/// Shared, lazily built operator for dimension N.
const BraidOperator& braid_operator(int N);

BraidOperator build_braid(int N);
bool braid_relation_check(int N);
/// (R - q^-1)(R + q) = 0 on every basis vector.
bool hecke_check(int N);
/// R is symmetric as a matrix.
bool braid_symmetry_check(int N);
/// R composed with its block inverse is the identity.
bool braid_inverse_check(int N);

/// Element of the k-th q-wedge power, keyed by basis index sets.
struct WedgeVector {
  int degree = 0;
  std::map<IndexSet, RatFunc> coeffs;

  void add(IndexSet I, const RatFunc& c);
  friend bool operator==(const WedgeVector& a, const WedgeVector& b) {
    return a.degree == b.degree && a.coeffs == b.coeffs;
  }
};

/// Element of a tensor product of two wedge powers, keyed by (I, J).
struct WedgePair {
  int k = 0, l = 0;
  std::map<std::pair<IndexSet, IndexSet>, RatFunc> coeffs;

  void add(IndexSet I, IndexSet J, const RatFunc& c);
  friend bool operator==(const WedgePair& a, const WedgePair& b) {
    return a.k == b.k && a.l == b.l && a.coeffs == b.coeffs;
  }
};

/// e_{w_1} ^ ... ^ e_{w_d} in the basis e_I.
WedgeVector wedge_reduce(const std::vector<int>& word);
/// The q-antisymmetrizing embedding, normalized so that projection after it is the identity.
Tensor wedge_embed(const WedgeVector& v);
/// Unnormalized embedding of a single basis vector: sum over orderings of (-q)^inv.
Tensor antisymmetrizer(IndexSet I);
WedgeVector wedge_project(const Tensor& t);
/// Projection of a degree k+l tensor onto the product of the k-th and l-th wedge powers.
WedgePair wedge_project_pair(const Tensor& t, int k);
Tensor wedge_embed_pair(const WedgePair& v);

/// The block braid carrying the first k tensor slots past the last l.
Tensor block_braid(const BraidOperator& R, const Tensor& t, int k, int l);
/// Its inverse, carrying the first l slots back past the last k.
Tensor block_braid_inverse(const BraidOperator& R, const Tensor& t, int k, int l);

/// Coefficients of the braiding between wedge powers of degrees k and l.
///
/// value(I, J, I', J') with |I| = |J| = k and |I'| = |J'| = l is the
/// coefficient of e_{I'} (x) e_J in the braiding of e_I (x) e_{J'}.
/// inverse(I, J, I', J') is the coefficient of e_J (x) e_{I'} in the inverse
/// braiding of e_{J'} (x) e_I.
class WedgeBraidTable {
 public:
  using Key = std::tuple<IndexSet, IndexSet, IndexSet, IndexSet>;

  WedgeBraidTable(int N, int k, int l);

  int N() const { return N_; }
  int k() const { return k_; }
  int l() const { return l_; }
  RatFunc value(IndexSet I, IndexSet J, IndexSet Ip, IndexSet Jp) const;
  RatFunc inverse(IndexSet I, IndexSet J, IndexSet Ip, IndexSet Jp) const;
  const std::map<Key, RatFunc>& entries() const { return fwd_; }
  const std::map<Key, RatFunc>& inverse_entries() const { return inv_; }

  nlohmann::json to_json(bool inverse_table = false) const;

 private:
  int N_, k_, l_;
  std::map<Key, RatFunc> fwd_;
  std::map<Key, RatFunc> inv_;
};

/// Shared, lazily built table. Throws DegreeOutOfRange unless 0 <= k, l <= N.
const WedgeBraidTable& wedge_braiding(int N, int k, int l);

/// Support condition: nonzero entries need J dom<= I, J' dom<= I', J\I = J'\I', I\J = I'\J'.
bool support_condition_holds(IndexSet I, IndexSet J, IndexSet Ip, IndexSet Jp);

struct TableReport {
  bool support_ok = true;
  bool diagonal_ok = true;
  bool inverse_diagonal_ok = true;
  bool inverse_support_ok = true;
  bool composition_ok = true;
  std::string first_failure;
  bool ok() const { return support_ok && diagonal_ok && inverse_diagonal_ok && inverse_support_ok && composition_ok; }
};

/// Checks support, both diagonal formulas, and that table and inverse table compose to the identity.
TableReport check_wedge_table(const WedgeBraidTable& t);

struct RMatrixLemmaReport {
  IndexSet I, Ip;
  int l = 0, lp = 0;
  RatFunc scalar;
  WedgePair xi, xi_prime, image;
  bool pass = false;
};

/// Builds xi and xi' for (I, I'), applies the inverse braiding to xi and compares with scalar * xi'.
RMatrixLemmaReport rmatrix_lemma_check(int N, IndexSet I, IndexSet Ip);

nlohmann::json wedge_vector_json(const WedgePair& v);

}  // namespace qrea

namespace qrea {

/// R^{IJ}_{I'J'} and (R^-1)^{IJ}_{I'J'} read from the shared wedge tables.
RatFunc rhat(int N, IndexSet I, IndexSet J, IndexSet Ip, IndexSet Jp);
RatFunc rhat_inv(int N, IndexSet I, IndexSet J, IndexSet Ip, IndexSet Jp);

}  // namespace qrea
