#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace qrea {

using Rational = mpq_class;

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

/// Integer-exponent Laurent polynomial in q with exact rational coefficients.
///
/// Stored densely: coeffs_[i] is the coefficient of q^(low_ + i). The
/// representation is canonical: either empty (the zero polynomial) or with
/// nonzero first and last coefficients, so structural equality is equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Rational& c);

  static LaurentPoly monomial(const Rational& c, int exponent);
  static LaurentPoly q_power(int exponent) { return monomial(Rational(1), exponent); }
  /// Builds from (exponent, coefficient) pairs; zero coefficients are dropped.
  static LaurentPoly from_terms(const std::map<int, Rational>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return coeffs_.size() == 1; }
  int low_exponent() const { return low_; }
  int high_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(int exponent) const;
  const Rational& leading_coefficient() const { return coeffs_.back(); }
  const std::vector<Rational>& dense() const { return coeffs_; }
  std::map<int, Rational> terms() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiplies by q^k.
  LaurentPoly shifted(int k) const;
  /// Derivative with respect to q.
  LaurentPoly derivative() const;

  Rational evaluate(const Rational& q0) const;
  /// Returns (p(1), p'(1)).
  std::pair<Rational, Rational> taylor1_at_1() const;

  std::size_t hash() const;
  std::string to_string() const;

  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

 private:
  void trim();

  int low_ = 0;
  std::vector<Rational> coeffs_;
};

namespace poly {

// Ordinary polynomial helpers on Laurent polynomials whose lowest exponent
// has been shifted to zero. Used by the rational-function canonicalizer.

/// Splits p = q^k * p0 with p0(0) != 0; returns (k, p0).
std::pair<int, LaurentPoly> split_power(const LaurentPoly& p);

/// Euclidean division of ordinary polynomials (both must have low exponent >= 0).
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);

/// Monic gcd of ordinary polynomials; gcd(0, 0) = 0.
LaurentPoly gcd(LaurentPoly a, LaurentPoly b);

}  // namespace poly

}  // namespace qrea
