#include "qrea/classical/hermitian.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>

#include "qrea/errors.hpp"

namespace qrea {

GaussMatrix GaussMatrix::identity(int n) {
  GaussMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

GaussMatrix GaussMatrix::adjoint() const {
  GaussMatrix m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(j, i) = (*this)(i, j).conj();
  return m;
}

bool GaussMatrix::is_hermitian() const { return *this == adjoint(); }

bool GaussMatrix::is_upper_triangular() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < i; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

GaussMatrix operator*(const GaussMatrix& a, const GaussMatrix& b) {
  if (a.n_ != b.n_) throw SizeMismatch("matrix sizes differ");
  GaussMatrix c(a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < a.n_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

GaussRat GaussMatrix::minor(IndexSet R, IndexSet C) const {
  if (R.size() != C.size()) throw SizeMismatch("minor needs equally many rows and columns");
  if (R.max() > n_ || C.max() > n_) throw PositionOutOfRange("minor index outside the matrix");
  std::vector<int> rows = R.elements(), cols = C.elements();
  int k = static_cast<int>(rows.size());
  std::vector<GaussRat> m(static_cast<std::size_t>(k * k));
  auto at = [&](int i, int j) -> GaussRat& { return m[static_cast<std::size_t>(i * k + j)]; };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      at(i, j) = (*this)(rows[static_cast<std::size_t>(i)] - 1, cols[static_cast<std::size_t>(j)] - 1);
  GaussRat det = 1;
  for (int c = 0; c < k; ++c) {
    int p = c;
    while (p < k && at(p, c).is_zero()) ++p;
    if (p == k) return GaussRat();
    if (p != c) {
      for (int j = 0; j < k; ++j) std::swap(at(p, j), at(c, j));
      det = -det;
    }
    det *= at(c, c);
    for (int i = c + 1; i < k; ++i) {
      if (at(i, c).is_zero()) continue;
      GaussRat f = at(i, c) / at(c, c);
      for (int j = c; j < k; ++j) at(i, j) -= f * at(c, j);
    }
  }
  return det;
}

CMatrix GaussMatrix::to_complex() const {
  CMatrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j).to_complex();
  return m;
}

HermitianMatrix HermitianMatrix::from_exact(GaussMatrix m) {
  if (!m.is_hermitian()) throw IllFormedInstance("matrix is not self-adjoint");
  HermitianMatrix h;
  h.mode = Mode::Exact;
  h.exact = std::move(m);
  return h;
}

HermitianMatrix HermitianMatrix::from_numeric(CMatrix m) {
  if (m.rows() != m.cols()) throw SizeMismatch("matrix is not square");
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) throw IllFormedInstance("matrix is not self-adjoint");
  HermitianMatrix h;
  h.mode = Mode::Numeric;
  h.numeric = (m + m.adjoint()) / 2.0;
  return h;
}

nlohmann::json HermitianMatrix::to_json() const {
  int n = N();
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < n; ++j) {
      if (is_exact()) {
        row.push_back(exact(i, j).to_json());
      } else {
        row.push_back({{"re", numeric(i, j).real()}, {"im", numeric(i, j).imag()}});
      }
    }
    rows.push_back(row);
  }
  return {{"N", n}, {"mode", is_exact() ? "exact" : "numeric"}, {"entries", rows}};
}

namespace {

double parse_double(const nlohmann::json& v) {
  if (v.is_number()) return v.get<double>();
  if (!v.is_string()) throw ParseError("matrix entry part must be a number or string");
  std::string s = v.get<std::string>();
  if (s.find('/') != std::string::npos) return parse_rational(s).get_d();
  try {
    std::size_t used = 0;
    double d = std::stod(s, &used);
    if (used != s.size()) throw ParseError("bad number '" + s + "'");
    return d;
  } catch (const std::logic_error&) {
    throw ParseError("bad number '" + s + "'");
  }
}

Rational parse_exact(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw ParseError("exact entries must be integers or \"p/q\" strings");
  return parse_rational(v.get<std::string>());
}

}  // namespace

HermitianMatrix HermitianMatrix::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("entries")) throw ParseError("matrix JSON needs \"entries\"");
  const auto& e = j.at("entries");
  if (!e.is_array()) throw ParseError("\"entries\" must be an array of rows");
  int n = static_cast<int>(e.size());
  if (j.contains("N") && j.at("N").get<int>() != n) throw ParseError("\"N\" does not match the number of rows");
  std::string mode = j.value("mode", "exact");
  if (mode != "exact" && mode != "numeric") throw ParseError("mode must be \"exact\" or \"numeric\"");
  GaussMatrix g(n);
  CMatrix c(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& row = e.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != n) throw ParseError("matrix must be square");
    for (int k = 0; k < n; ++k) {
      const auto& x = row.at(static_cast<std::size_t>(k));
      if (!x.is_object()) throw ParseError("entries must be {\"re\", \"im\"} objects");
      if (mode == "exact") {
        g(i, k) = GaussRat(x.contains("re") ? parse_exact(x.at("re")) : Rational(0),
                           x.contains("im") ? parse_exact(x.at("im")) : Rational(0));
      } else {
        c(i, k) = Complex(x.contains("re") ? parse_double(x.at("re")) : 0.0,
                          x.contains("im") ? parse_double(x.at("im")) : 0.0);
      }
    }
  }
  return mode == "exact" ? from_exact(std::move(g)) : from_numeric(std::move(c));
}

std::vector<double> eigenvalues(const CMatrix& z) {
  if (z.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<CMatrix> es(z, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qrea
