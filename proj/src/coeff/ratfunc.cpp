#include "qrea/coeff/ratfunc.hpp"

#include "qrea/errors.hpp"

namespace qrea {

RatFunc RatFunc::normalize(LaurentPoly n, LaurentPoly d) {
  if (d.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  RatFunc r;
  if (n.is_zero()) return r;
  auto [kd, d0] = poly::split_power(d);
  auto [kn, n0] = poly::split_power(n);
  if (!d0.is_monomial()) {
    LaurentPoly g = poly::gcd(n0, d0);
    if (!g.is_one()) {
      n0 = poly::divmod(n0, g).first;
      d0 = poly::divmod(d0, g).first;
    }
  }
  Rational lead = d0.leading_coefficient();
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    n0 *= inv;
    d0 *= inv;
  }
  r.num_ = n0.shifted(kn - kd);
  r.den_ = std::move(d0);
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) return *this = normalize(num_ + o.num_, den_);
  return *this = normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  return *this = normalize(num_ * o.num_, den_ * o.den_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ZeroDenominator("inverse of zero");
  return normalize(den_, num_);
}

Rational RatFunc::evaluate(const Rational& q0) const {
  Rational d = den_.evaluate(q0);
  if (sgn(d) == 0) throw PoleAtPoint("denominator vanishes at q = " + qrea::to_string(q0));
  return num_.evaluate(q0) / d;
}

std::pair<Rational, Rational> RatFunc::taylor1_at_1() const {
  auto [n0, n1] = num_.taylor1_at_1();
  auto [d0, d1] = den_.taylor1_at_1();
  if (sgn(d0) == 0) throw PoleAtPoint("denominator vanishes at q = 1");
  return {n0 / d0, (n1 * d0 - n0 * d1) / (d0 * d0)};
}

std::size_t RatFunc::hash() const { return num_.hash() * 31 + den_.hash(); }

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

nlohmann::json RatFunc::to_json() const {
  return nlohmann::json{{"num", num_.to_json()}, {"den", den_.to_json()}};
}

RatFunc RatFunc::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw ParseError("RatFunc JSON needs num and den");
  return normalize(LaurentPoly::from_json(j.at("num")), LaurentPoly::from_json(j.at("den")));
}

RatFunc minus_q_power(int e) {
  LaurentPoly p = LaurentPoly::q_power(e);
  if (e % 2 != 0) p = -p;
  return RatFunc(p);
}

LaurentPoly q2_factorial(int k) {
  LaurentPoly f(1);
  for (int j = 1; j <= k; ++j) {
    // [j]_{q^2} = 1 + q^2 + ... + q^{2(j-1)}
    LaurentPoly s;
    for (int t = 0; t < j; ++t) s += LaurentPoly::q_power(2 * t);
    f *= s;
  }
  return f;
}

}  // namespace qrea
