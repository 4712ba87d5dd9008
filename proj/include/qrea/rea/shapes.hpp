#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qrea/certificate.hpp"
#include "qrea/combinatorics/index_set.hpp"

namespace qrea {

/// Row and column sets of a minor Z_{rows, cols}.
using MinorLabel = std::pair<IndexSet, IndexSet>;

std::string minor_label_string(const MinorLabel& m);
nlohmann::json minor_label_json(const MinorLabel& m);

/// A shape (tau, u) with the phases kept as symbols: "0" off the support,
/// "s1", "s2", ... on fixed points, and conjugate pairs "y"/"ybar",
/// "y2"/"y2bar", ... on the two points of a transposition. The plain signs
/// "1" and "-1" are accepted as fixed-point values.
struct QuantumShape {
  int N = 0;
  std::vector<int> tau;  // tau[i-1] is the image of i
  std::vector<std::string> u;

  IndexSet support() const;
  int rank() const { return support().size(); }
  /// The first k elements of the support.
  IndexSet prefix(int k) const;
  IndexSet image(IndexSet s) const;
  /// Z_{S,k} = Z_{tau(P_[k]), P_[k]}.
  MinorLabel label(int k) const;
  bool self_adjoint() const;
  /// Throws IllFormedInstance on a non-involution, mismatched lengths, a
  /// moved point with u = 0, or an unrecognized symbol.
  void validate() const;

  nlohmann::json to_json() const;
  static QuantumShape from_json(const nlohmann::json& j);
  friend bool operator==(const QuantumShape&, const QuantumShape&) = default;
};

/// All self-adjoint shape families on [N]: by decreasing rank, then tau
/// (identity first, then by number of transpositions and lexicographically),
/// then support in lexicographic order. Rank 0 is included only on request.
std::vector<QuantumShape> enumerate_shapes(int N, bool include_rank0 = false);

enum class IdealFlavor { Dominance, Lex };
const char* flavor_name(IdealFlavor f);
IdealFlavor parse_flavor(const std::string& s);

/// Generator labels of the shape ideal: every minor of size rank + 1, and for
/// each k up to the rank the Z_{I,J} with (J, I) strictly below
/// (P_[k], tau(P_[k])), closed under Z_{I,J} -> Z_{J,I}.
struct ShapeIdeal {
  QuantumShape shape;
  IdealFlavor flavor = IdealFlavor::Dominance;
  std::vector<MinorLabel> generators;

  /// True when Z_{rows, cols} is a generator or has size above the rank.
  bool covers(const MinorLabel& m) const;
  nlohmann::json to_json() const;
};

ShapeIdeal build_shape_ideal(const QuantumShape& s, IdealFlavor flavor = IdealFlavor::Dominance);

/// q^e with e = |I n P_[k]| + |I n tau(P_[k])| - |J n P_[k]| - |J n tau(P_[k])|.
int qcomm_exponent(const MinorLabel& zs, IndexSet I, IndexSet J);

/// Certifies Z_{S,k} Z_{I,J} = q^e Z_{I,J} Z_{S,k} modulo the ideal by
/// specializing the general commutation relation. Summands whose minors are
/// covered by the ideal pattern are dropped; any other summand besides the two
/// designated products must cancel in the star model, or the result is
/// inconclusive.
Certificate shape_qcomm_certificate(const QuantumShape& s, int k, IndexSet I, IndexSet J,
                                    IdealFlavor flavor = IdealFlavor::Dominance);

/// Same check for an arbitrary leading minor in place of Z_{S,k}.
Certificate qcomm_certificate_for_label(const ShapeIdeal& ideal, const MinorLabel& zs, IndexSet I, IndexSet J);

/// Every k and every (I, J) with |I| = |J| in 1..max_size.
std::vector<Certificate> shape_qcomm_sweep(const QuantumShape& s, int max_size = 2,
                                           IdealFlavor flavor = IdealFlavor::Dominance);

}  // namespace qrea
