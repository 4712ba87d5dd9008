#include "qrea/coeff/gaussrat.hpp"

#include "qrea/errors.hpp"

namespace qrea {

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  Rational n = o.norm2();
  if (sgn(n) == 0) throw ZeroDenominator("complex division by zero");
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}

std::string GaussRat::to_string() const {
  if (is_real()) return qrea::to_string(re);
  std::string s = sgn(re) == 0 ? "" : qrea::to_string(re) + (sgn(im) < 0 ? "-" : "+");
  if (sgn(re) == 0 && sgn(im) < 0) s += "-";
  Rational a = abs(im);
  if (a != 1) s += qrea::to_string(a) + "*";
  return s + "i";
}

nlohmann::json GaussRat::to_json() const {
  return nlohmann::json{{"re", qrea::to_string(re)}, {"im", qrea::to_string(im)}};
}

GaussRat GaussRat::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("complex JSON must be an object");
  auto part = [&](const char* key) {
    if (!j.contains(key)) return Rational(0);
    const auto& v = j.at(key);
    return v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
  };
  return {part("re"), part("im")};
}

}  // namespace qrea
