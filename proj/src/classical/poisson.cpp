#include "qrea/classical/poisson.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <mutex>
#include <sstream>

#include "qrea/errors.hpp"
#include "qrea/qmatrix/ncpoly.hpp"

namespace qrea {

CommPoly CommPoly::variable(int g) {
  CommPoly p;
  p.add({g}, GaussRat(1));
  return p;
}

CommPoly CommPoly::constant(const GaussRat& c) {
  CommPoly p;
  p.add({}, c);
  return p;
}

void CommPoly::add(Monomial m, const GaussRat& c) {
  if (c.is_zero()) return;
  std::sort(m.begin(), m.end());
  auto [it, fresh] = terms_.try_emplace(std::move(m), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  CommPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      CommPoly::Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add(std::move(m), ca * cb);
    }
  return out;
}

CommPoly operator*(CommPoly a, const GaussRat& c) {
  if (c.is_zero()) return {};
  for (auto& [m, v] : a.terms_) v *= c;
  return a;
}

CommPoly CommPoly::derivative(int g) const {
  CommPoly out;
  for (const auto& [m, c] : terms_) {
    auto n = static_cast<long>(std::count(m.begin(), m.end(), g));
    if (n == 0) continue;
    Monomial rest = m;
    rest.erase(std::find(rest.begin(), rest.end(), g));
    out.add(std::move(rest), c * GaussRat(n));
  }
  return out;
}

Complex CommPoly::evaluate(const std::vector<Complex>& point) const {
  Complex s = 0;
  for (const auto& [m, c] : terms_) {
    Complex v = c.to_complex();
    for (int g : m) v *= point[static_cast<std::size_t>(g)];
    s += v;
  }
  return s;
}

std::string CommPoly::to_string(int N) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (int g : m) os << "*" << generator_name(N, g, 'Z');
  }
  return os.str();
}

namespace {

using TensorMatrix = std::vector<CommPoly>;  // N^2 x N^2, row-major

struct Tensors {
  int N;
  TensorMatrix ix;  // i X^RE
};

TensorMatrix mul(const TensorMatrix& a, const TensorMatrix& b, int n) {
  TensorMatrix c(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const CommPoly& x = a[static_cast<std::size_t>(i * n + k)];
      if (x.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const CommPoly& y = b[static_cast<std::size_t>(k * n + j)];
        if (!y.is_zero()) c[static_cast<std::size_t>(i * n + j)] += x * y;
      }
    }
  return c;
}

Tensors build(int N) {
  int n = N * N;
  auto at = [&](TensorMatrix& m, int a, int b, int c, int d) -> CommPoly& {
    return m[static_cast<std::size_t>((a * N + b) * n + (c * N + d))];
  };
  auto z = [&](int a, int c) { return CommPoly::variable(gen_index(N, a + 1, c + 1)); };
  auto rho = [](int a, int b) { return a == b ? 1 : (a < b ? 2 : 0); };
  TensorMatrix zz(static_cast<std::size_t>(n * n)), z1(zz.size()), oz(zz.size()), r(zz.size()), r21(zz.size());
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        for (int d = 0; d < N; ++d) {
          at(zz, a, b, c, d) = z(a, c) * z(b, d);
          if (b == d) at(z1, a, b, c, d) = z(a, c);
          if (a == c) at(oz, a, b, c, d) = z(b, d);
          if (c == b && d == a) {
            at(r, a, b, c, d) = CommPoly::constant(GaussRat(rho(a, b)));
            at(r21, a, b, c, d) = CommPoly::constant(GaussRat(rho(b, a)));
          }
        }
  TensorMatrix t1 = mul(r21, zz, n), t2 = mul(zz, r, n), t3 = mul(mul(z1, r, n), oz, n), t4 = mul(mul(oz, r21, n), z1, n);
  TensorMatrix out(zz.size());
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = t1[p] - t2[p] + t3[p] - t4[p];
  return {N, std::move(out)};
}

const Tensors& tensors(int N) {
  if (N < 1 || N > 4) throw DegreeOutOfRange("bivector needs N in 1..4");
  static std::once_flag flags[4];
  static Tensors cache[4];
  std::call_once(flags[N - 1], [&] { cache[N - 1] = build(N); });
  return cache[N - 1];
}

}  // namespace

CommPoly bivector_entry(int N, int i, int j, int k, int l) {
  const Tensors& t = tensors(N);
  int n = N * N;
  return t.ix[static_cast<std::size_t>(((i - 1) * N + (k - 1)) * n + ((j - 1) * N + (l - 1)))];
}

CommPoly re_bracket(int N, int i, int j, int k, int l) {
  return bivector_entry(N, i, j, k, l) * GaussRat(0, -1);
}

namespace {

/// Real coordinate c_a as a linear form sum_g coeff * z_g.
std::vector<std::vector<std::pair<int, Complex>>> coordinate_forms(int N) {
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<std::vector<std::pair<int, Complex>>> out;
  for (int i = 1; i <= N; ++i)
    for (int j = i; j <= N; ++j) {
      if (i == j) {
        out.push_back({{gen_index(N, i, i), 1.0}});
      } else {
        out.push_back({{gen_index(N, i, j), s}, {gen_index(N, j, i), s}});
        out.push_back({{gen_index(N, i, j), Complex(0, -s)}, {gen_index(N, j, i), Complex(0, s)}});
      }
    }
  return out;
}

std::vector<Complex> point_of(const CMatrix& z) {
  int N = static_cast<int>(z.rows());
  std::vector<Complex> p(static_cast<std::size_t>(N * N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) p[static_cast<std::size_t>(gen_index(N, i + 1, j + 1))] = z(i, j);
  return p;
}

}  // namespace

std::vector<double> real_coordinates(const CMatrix& z) {
  int N = static_cast<int>(z.rows());
  std::vector<double> c;
  const double r2 = std::sqrt(2.0);
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j) {
      if (i == j) {
        c.push_back(z(i, i).real());
      } else {
        c.push_back(r2 * z(i, j).real());
        c.push_back(r2 * z(i, j).imag());
      }
    }
  return c;
}

BivectorReport poisson_bivector(const CMatrix& z) {
  int N = static_cast<int>(z.rows());
  int n = N * N;
  auto forms = coordinate_forms(N);
  auto point = point_of(z);
  Eigen::MatrixXcd zb(n, n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      zb(g, h) = re_bracket(N, gen_row(N, g), gen_col(N, g), gen_row(N, h), gen_col(N, h)).evaluate(point);
  Eigen::MatrixXcd pc = Eigen::MatrixXcd::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (auto [g, x] : forms[static_cast<std::size_t>(a)])
        for (auto [h, y] : forms[static_cast<std::size_t>(b)]) pc(a, b) += x * y * zb(g, h);
  BivectorReport rep;
  rep.imaginary = n == 0 ? 0.0 : pc.imag().cwiseAbs().maxCoeff();
  Eigen::MatrixXd p = pc.real();
  rep.antisymmetry = n == 0 ? 0.0 : (p + p.transpose()).cwiseAbs().maxCoeff();
  rep.pi = (p - p.transpose()) / 2.0;
  return rep;
}

nlohmann::json TangencyReport::to_json() const {
  return {{"dim_range", dim_range},         {"dim_u", dim_u},   {"dim_t", dim_t},
          {"dim_intersection", dim_intersection}, {"range_in_u", range_in_u}, {"range_in_t", range_in_t},
          {"antisymmetry", antisymmetry}};
}

namespace {

int numeric_rank(const Eigen::MatrixXd& m, double tol) {
  if (m.cols() == 0 || m.rows() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i) {
    double s = svd.singularValues()(i);
    if (s > tol * 1e-2 && s < tol * 1e2) throw IllConditioned("singular value " + std::to_string(s) + " near the rank threshold");
    if (s > tol) ++r;
  }
  return r;
}

Eigen::MatrixXd hcat(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd m(a.rows(), a.cols() + b.cols());
  m << a, b;
  return m;
}

}  // namespace

TangencyReport leaf_tangency_check(const CMatrix& z0, double tol) {
  int N = static_cast<int>(z0.rows());
  int n = N * N;
  double scale = N == 0 ? 0.0 : z0.cwiseAbs().maxCoeff();
  CMatrix z = scale > 0 ? CMatrix(z0 / scale) : z0;
  BivectorReport bv = poisson_bivector(z);
  TangencyReport rep;
  rep.antisymmetry = bv.antisymmetry;
  auto as_column = [&](const CMatrix& dz) {
    auto c = real_coordinates(dz);
    return Eigen::Map<Eigen::VectorXd>(c.data(), static_cast<Eigen::Index>(c.size())).eval();
  };
  Eigen::MatrixXd U(n, n), T(n, n);
  int cu = 0, ct = 0;
  auto unit = [&](int a, int b) {
    CMatrix e = CMatrix::Zero(N, N);
    e(a, b) = 1;
    return e;
  };
  const Complex I(0, 1);
  for (int a = 0; a < N; ++a)
    for (int b = a; b < N; ++b) {
      std::vector<CMatrix> us, ts;
      if (a == b) {
        us.push_back(I * unit(a, a));
        ts.push_back(unit(a, a));
      } else {
        us.push_back(unit(a, b) - unit(b, a));
        us.push_back(I * (unit(a, b) + unit(b, a)));
        ts.push_back(unit(a, b));
        ts.push_back(I * unit(a, b));
      }
      for (const auto& A : us) U.col(cu++) = as_column(A.adjoint() * z + z * A);
      for (const auto& B : ts) T.col(ct++) = as_column(B.adjoint() * z + z * B);
    }
  rep.dim_range = numeric_rank(bv.pi, tol);
  rep.dim_u = numeric_rank(U, tol);
  rep.dim_t = numeric_rank(T, tol);
  rep.dim_intersection = rep.dim_u + rep.dim_t - numeric_rank(hcat(U, T), tol);
  rep.range_in_u = numeric_rank(hcat(U, bv.pi), tol) == rep.dim_u;
  rep.range_in_t = numeric_rank(hcat(T, bv.pi), tol) == rep.dim_t;
  return rep;
}

nlohmann::json JacobiReport::to_json() const {
  return {{"N", N}, {"samples", samples}, {"symbolic_zero", symbolic_zero}, {"max_residual", max_residual}};
}

JacobiReport jacobi_check(int N, int samples, std::mt19937_64& rng) {
  int n = N * N;
  std::vector<std::vector<CommPoly>> B(static_cast<std::size_t>(n), std::vector<CommPoly>(static_cast<std::size_t>(n)));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      B[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] =
          re_bracket(N, gen_row(N, g), gen_col(N, g), gen_row(N, h), gen_col(N, h));
  auto br = [&](int a, const CommPoly& p) {
    CommPoly out;
    for (int m = 0; m < n; ++m) {
      CommPoly d = p.derivative(m);
      if (!d.is_zero()) out += d * B[static_cast<std::size_t>(a)][static_cast<std::size_t>(m)];
    }
    return out;
  };
  auto at = [&](int a, int b) -> const CommPoly& { return B[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  JacobiReport rep;
  rep.N = N;
  rep.samples = samples;
  rep.symbolic_zero = true;
  for (int a = 0; a < n && rep.symbolic_zero; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (!(br(a, at(b, c)) + br(b, at(c, a)) + br(c, at(a, b))).is_zero()) rep.symbolic_zero = false;
  // Numeric residual through the chain rule, independent of the symbolic sums.
  std::vector<CommPoly> D(static_cast<std::size_t>(n * n * n));
  auto dix = [&](int q, int r, int m) { return static_cast<std::size_t>((q * n + r) * n + m); };
  for (int q = 0; q < n; ++q)
    for (int r = 0; r < n; ++r)
      for (int m = 0; m < n; ++m) D[dix(q, r, m)] = at(q, r).derivative(m);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> bv(static_cast<std::size_t>(n * n)), dv(D.size());
  for (int s = 0; s < samples; ++s) {
    CMatrix a(N, N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) a(i, j) = Complex(g(rng), g(rng));
    auto point = point_of((a + a.adjoint()) / 2.0);
    for (int p = 0; p < n; ++p)
      for (int m = 0; m < n; ++m) bv[static_cast<std::size_t>(p * n + m)] = at(p, m).evaluate(point);
    for (std::size_t k = 0; k < D.size(); ++k) dv[k] = D[k].evaluate(point);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int w = 0; w < n; ++w) {
          Complex total = 0;
          int trip[3] = {x, y, w};
          for (int rot = 0; rot < 3; ++rot) {
            int p = trip[rot], q = trip[(rot + 1) % 3], r = trip[(rot + 2) % 3];
            for (int m = 0; m < n; ++m) total += dv[dix(q, r, m)] * bv[static_cast<std::size_t>(p * n + m)];
          }
          rep.max_residual = std::max(rep.max_residual, std::abs(total));
        }
  }
  return rep;
}

}  // namespace qrea
