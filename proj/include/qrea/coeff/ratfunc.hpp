#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "qrea/coeff/laurent.hpp"

namespace qrea {

/// Exact rational function in q: numerator / denominator of Laurent polynomials.
///
/// Canonical form: gcd(num, den) is a unit; the denominator is an ordinary
/// polynomial with nonzero constant term and leading coefficient 1. The
/// numerator absorbs every power of q and every scalar. Two equal rational
/// functions therefore have identical representations.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT

  /// Reduces n/d to canonical form. Throws ZeroDenominator if d == 0.
  static RatFunc normalize(LaurentPoly n, LaurentPoly d);
  static RatFunc q_power(int e) { return RatFunc(LaurentPoly::q_power(e)); }

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc operator-() const;
  RatFunc inverse() const;

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Exact value at q0. Throws PoleAtPoint when the denominator vanishes there.
  Rational evaluate(const Rational& q0) const;
  /// Value and first derivative at q = 1 (equivalently d/dh at h = 0 for q = e^h).
  std::pair<Rational, Rational> taylor1_at_1() const;

  std::size_t hash() const;
  std::string to_string() const;
  nlohmann::json to_json() const;
  static RatFunc from_json(const nlohmann::json& j);

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

/// (-q)^e as a rational function.
RatFunc minus_q_power(int e);

/// [k]_{q^2}! = prod_{j=1..k} (1 - q^{2j}) / (1 - q^2).
LaurentPoly q2_factorial(int k);

struct RatFuncHash {
  std::size_t operator()(const RatFunc& f) const { return f.hash(); }
};

}  // namespace qrea
