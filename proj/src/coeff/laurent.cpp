#include "qrea/coeff/laurent.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "qrea/errors.hpp"

namespace qrea {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(s));
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw ZeroDenominator("rational literal '" + s + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational: '" + s + "'");
  }
}

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (sgn(c) != 0) {
    coeffs_.push_back(c);
    coeffs_.back().canonicalize();
  }
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
  LaurentPoly p(c);
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, Rational>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(c, e);
  return p;
}

bool LaurentPoly::is_one() const { return low_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational LaurentPoly::coefficient(int exponent) const {
  int idx = exponent - low_;
  if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[idx];
}

std::map<int, Rational> LaurentPoly::terms() const {
  std::map<int, Rational> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && sgn(coeffs_[first]) == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (sgn(coeffs_[last - 1]) == 0) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high_exponent(), o.high_exponent());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
    low_ = lo;
  }
  if (static_cast<int>(coeffs_.size()) < hi - lo + 1) coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[static_cast<std::size_t>(o.low_ - low_) + i] += o.coeffs_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  Rational tmp;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      r.coeffs_[i + j] += tmp;
    }
  }
  r.trim();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly r;
  if (is_zero()) return r;
  r.low_ = low_ - 1;
  r.coeffs_.resize(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] * (low_ + static_cast<int>(i));
  r.trim();
  return r;
}

Rational LaurentPoly::evaluate(const Rational& q0) const {
  if (is_zero()) return Rational(0);
  if (sgn(q0) == 0 && low_ < 0) throw PoleAtPoint("negative power of q at q = 0");
  // Horner from the top, then multiply by q0^low.
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q0 + *it;
  Rational base = low_ >= 0 ? q0 : Rational(1) / q0;
  for (int k = 0; k < std::abs(low_); ++k) acc *= base;
  return acc;
}

std::pair<Rational, Rational> LaurentPoly::taylor1_at_1() const {
  Rational c0(0), c1(0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    c0 += coeffs_[i];
    c1 += coeffs_[i] * (low_ + static_cast<int>(i));
  }
  return {c0, c1};
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = std::hash<int>{}(low_) * 0x9E3779B97F4A7C15ULL;
  for (const auto& c : coeffs_) {
    std::size_t hn = mpz_get_si(c.get_num_mpz_t()) * 1000003ULL + mpz_get_si(c.get_den_mpz_t());
    h ^= hn + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest power last reads naturally for Laurent expressions like q^-1 - q.
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    int e = low_ + static_cast<int>(i);
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (!unit || e == 0) os << qrea::to_string(mag);
    if (e != 0) {
      if (!unit) os << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : terms()) j[std::to_string(e)] = qrea::to_string(c);
  return j;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("LaurentPoly JSON must be an object");
  LaurentPoly p;
  for (const auto& [key, value] : j.items()) {
    int e = 0;
    try {
      e = std::stoi(key);
    } catch (const std::exception&) {
      throw ParseError("bad exponent key '" + key + "'");
    }
    Rational c = value.is_string() ? parse_rational(value.get<std::string>()) : Rational(value.get<long>());
    p += monomial(c, e);
  }
  return p;
}

namespace poly {

std::pair<int, LaurentPoly> split_power(const LaurentPoly& p) {
  if (p.is_zero()) return {0, p};
  return {p.low_exponent(), p.shifted(-p.low_exponent())};
}

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw ZeroDenominator("polynomial division by zero");
  // Work on coefficient vectors indexed from exponent 0.
  auto to_vec = [](const LaurentPoly& p) {
    std::vector<Rational> v(static_cast<std::size_t>(p.is_zero() ? 0 : p.high_exponent() + 1));
    for (std::size_t i = 0; i < p.dense().size(); ++i) v[static_cast<std::size_t>(p.low_exponent()) + i] = p.dense()[i];
    return v;
  };
  std::vector<Rational> r = to_vec(a);
  std::vector<Rational> d = to_vec(b);
  int db = static_cast<int>(d.size()) - 1;
  const Rational lead = d.back();
  std::map<int, Rational> quot;
  for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
    if (sgn(r[static_cast<std::size_t>(k)]) == 0) continue;
    Rational f = r[static_cast<std::size_t>(k)] / lead;
    quot[k - db] = f;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= f * d[static_cast<std::size_t>(i)];
  }
  std::map<int, Rational> rem;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (sgn(r[i]) != 0) rem[static_cast<int>(i)] = r[i];
  return {LaurentPoly::from_terms(quot), LaurentPoly::from_terms(rem)};
}

LaurentPoly gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    LaurentPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  a *= Rational(1) / a.leading_coefficient();
  return a;
}

}  // namespace poly

}  // namespace qrea
