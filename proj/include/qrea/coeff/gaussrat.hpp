#pragma once

#include <complex>
#include <string>

#include "qrea/coeff/laurent.hpp"

namespace qrea {

/// Exact complex number with rational real and imaginary parts.
struct GaussRat {
  Rational re;
  Rational im;

  GaussRat() = default;
  GaussRat(long r) : re(r) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  static GaussRat i_unit() { return GaussRat(0, 1); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussRat conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
  GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);
  GaussRat operator-() const { return {-re, -im}; }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }

  std::string to_string() const;
  nlohmann::json to_json() const;
  static GaussRat from_json(const nlohmann::json& j);
};

}  // namespace qrea
