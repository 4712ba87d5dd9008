#include "qrea/coeff/matrix.hpp"

#include "qrea/errors.hpp"

namespace qrea {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFunc(1);
  return m;
}

RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
  if (x.cols_ != y.rows_) throw SizeMismatch("matrix product dimensions");
  RatMatrix z(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const RatFunc& a = x(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j)
        if (!y(k, j).is_zero()) z(i, j) += a * y(k, j);
    }
  return z;
}

std::vector<std::size_t> RatMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && (*this)(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
    RatFunc inv = (*this)(r, c).inverse();
    for (std::size_t j = c; j < cols_; ++j)
      if (!(*this)(r, j).is_zero()) (*this)(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || (*this)(i, c).is_zero()) continue;
      RatFunc f = (*this)(i, c);
      for (std::size_t j = c; j < cols_; ++j)
        if (!(*this)(r, j).is_zero()) (*this)(i, j) -= f * (*this)(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
  if (rows_ != cols_) throw SizeMismatch("inverse of a non-square matrix");
  std::size_t n = rows_;
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = RatFunc(1);
  }
  auto piv = aug.rref();
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

std::uint64_t mpz_mod(const mpz_class& z, std::uint64_t p) {
  mpz_class m = z % mpz_class(static_cast<unsigned long>(p));
  if (m < 0) m += static_cast<unsigned long>(p);
  return m.get_ui();
}

}  // namespace

std::uint64_t to_mod_p(const Rational& r, std::uint64_t p) {
  std::uint64_t d = mpz_mod(r.get_den(), p);
  if (d == 0) throw PoleAtPoint("denominator divisible by the modulus");
  return mulmod(mpz_mod(r.get_num(), p), powmod(d, p - 2, p), p);
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    std::uint64_t inv = powmod(rows[rank][c], p - 2, p);
    for (std::size_t j = c; j < cols; ++j) rows[rank][j] = mulmod(rows[rank][j], inv, p);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      std::uint64_t f = rows[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        if (rows[rank][j]) rows[i][j] = (rows[i][j] + p - mulmod(f, rows[rank][j], p)) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace qrea
