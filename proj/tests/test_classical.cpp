#include <cmath>
#include <random>

#include "doctest.h"
#include "qrea/classical/poisson.hpp"
#include "qrea/classical/shape.hpp"
#include "qrea/errors.hpp"

using namespace qrea;

namespace {

GaussMatrix gm(std::vector<std::vector<GaussRat>> rows) {
  GaussMatrix m(static_cast<int>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return m;
}

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

std::array<int, 3> sign_counts(const CMatrix& z) {
  std::array<int, 3> c{0, 0, 0};
  double scale = std::max(1.0, max_abs(z));
  for (double x : eigenvalues(z)) ++c[x > 1e-9 * scale ? 0 : (x < -1e-9 * scale ? 1 : 2)];
  return c;
}

// i {Z_ij, Z_kl} written out entrywise, with rho_aa = 1, rho_ab = 2 for a < b.
Complex bivector_oracle(const CMatrix& z, int i, int j, int k, int l) {
  int n = static_cast<int>(z.rows());
  auto rho = [](int a, int b) { return a == b ? 1.0 : (a < b ? 2.0 : 0.0); };
  auto Z = [&](int a, int b) { return z(a - 1, b - 1); };
  Complex v = rho(k, i) * Z(k, j) * Z(i, l) - rho(l, j) * Z(i, l) * Z(k, j);
  if (k == j)
    for (int a = 1; a <= n; ++a) v += rho(a, k) * Z(i, a) * Z(a, l);
  if (i == l)
    for (int b = 1; b <= n; ++b) v -= rho(b, i) * Z(k, b) * Z(b, j);
  return v;
}

std::vector<Complex> generator_point(const CMatrix& z) {
  std::vector<Complex> p;
  for (int i = 0; i < z.rows(); ++i)
    for (int j = 0; j < z.cols(); ++j) p.push_back(z(i, j));
  return p;
}

}  // namespace

TEST_CASE("shape of diagonal and shape matrices") {
  auto d = shape_of(HermitianMatrix::from_exact(gm({{5, 0, 0}, {0, -2, 0}, {0, 0, 0}})));
  CHECK(d.tau == std::vector<int>{1, 2, 3});
  CHECK(d.u[0] == Complex(1, 0));
  CHECK(d.u[1] == Complex(-1, 0));
  CHECK(d.u[2] == Complex(0, 0));
  CHECK(d.fully_exact());

  GaussRat i = GaussRat::i_unit();
  GaussMatrix s = gm({{0, i}, {-i, 0}});
  auto sh = shape_of(HermitianMatrix::from_exact(s));
  CHECK(sh.tau == std::vector<int>{2, 1});
  REQUIRE(sh.exact_matrix().has_value());
  CHECK(*sh.exact_matrix() == s);
  // S e_1 = u_1 e_2 reads u_1 from the (2, 1) entry.
  CHECK(sh.exact_u[0] == -i);

  CHECK(shape_of(HermitianMatrix::from_exact(GaussMatrix(3))).rank() == 0);
}

TEST_CASE("shape output is a valid shape matrix") {
  sample::Rng rng(5);
  for (int t = 0; t < 60; ++t) {
    int N = 1 + t % 4;
    auto S = sample::shape(N, rng);
    auto z = sample::hermitian_of_shape(S, rng);
    auto got = shape_of(HermitianMatrix::from_exact(z));
    CHECK_NOTHROW(got.validate());
    CMatrix m = got.matrix();
    CHECK(max_abs(m - m.adjoint()) < 1e-12);
    for (double x : eigenvalues(m))
      CHECK((std::abs(x) < 1e-10 || std::abs(x - 1) < 1e-10 || std::abs(x + 1) < 1e-10));
    CHECK(got.same_as(S));
  }
}

TEST_CASE("shape is invariant under the triangular group") {
  sample::Rng rng(17);
  for (int t = 0; t < 40; ++t) {
    auto S = sample::shape(3, rng);
    auto z = sample::hermitian_of_shape(S, rng);
    CHECK(tn_invariance_check(z, sample::elementary(3, rng)));
    CHECK(tn_invariance_check(z, sample::diagonal(3, rng)));
    CHECK(tn_invariance_check(z, sample::triangular(3, rng)));
  }
  auto z = sample::hermitian_of_shape(sample::shape(3, rng), rng);
  CHECK(tn_invariance_check(z, GaussMatrix::identity(3)));
  CHECK(tn_invariance_check(z, gm({{2, 0, 0}, {0, 1, 0}, {0, 0, Rational(1, 3)}})));
  CHECK_THROWS_AS(tn_invariance_check(z, gm({{1, 0, 0}, {1, 1, 0}, {0, 0, 1}})), NotTriangular);
  CHECK_THROWS_AS(tn_invariance_check(z, gm({{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), NotTriangular);
}

TEST_CASE("decompose examples") {
  GaussMatrix s = gm({{0, 0, 1}, {0, -1, 0}, {1, 0, 0}});
  auto d = decompose(HermitianMatrix::from_exact(s));
  CHECK(max_abs(d.t - CMatrix::Identity(3, 3)) < 1e-12);
  CHECK(max_abs(d.shape.matrix() - s.to_complex()) < 1e-12);

  Rational delta(3, 2);
  auto d2 = decompose(HermitianMatrix::from_exact(gm({{0, 1}, {1, delta}})));
  CHECK(d2.shape.tau == std::vector<int>{2, 1});
  CHECK(std::abs(d2.shape.u[0] - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(d2.shape.u[1] - Complex(1, 0)) < 1e-12);
  CMatrix t(2, 2);
  t << 1, 0.75, 0, 1;
  CHECK(max_abs(d2.t - t) < 1e-12);
}

TEST_CASE("decompose agrees with shape_of and reconstructs z") {
  sample::Rng rng(23);
  for (int t = 0; t < 50; ++t) {
    int N = 1 + t % 4;
    auto S = sample::shape(N, rng);
    auto z = HermitianMatrix::from_exact(sample::hermitian_of_shape(S, rng));
    auto d = decompose(z);
    CHECK(d.residual <= 1e-9);
    for (int i = 0; i < N; ++i) {
      CHECK(d.t(i, i).real() > 0);
      CHECK(std::abs(d.t(i, i).imag()) < 1e-12);
    }
    CHECK(max_abs(d.t.adjoint() * d.shape.matrix() * d.t - z.value()) <= 1e-9 * std::max(1.0, max_abs(z.value())));
    CHECK(d.shape.same_as(shape_of(z), 1e-8));
  }
  for (int t = 0; t < 20; ++t) {
    auto z = HermitianMatrix::from_numeric(sample::numeric_hermitian(4, rng));
    auto d = decompose(z);
    CHECK(d.residual <= 1e-9);
    CHECK(d.shape.rank() == 4);
  }
}

TEST_CASE("build leaf point examples") {
  auto swap = ShapeMatrix::from_exact({2, 1}, {1, 1});
  auto z = build_leaf_point(swap, std::vector<Rational>{1, -1});
  REQUIRE(z.is_exact());
  CHECK(z.exact == gm({{0, 1}, {1, 0}}));

  auto z2 = build_leaf_point(swap, std::vector<Rational>{2, -3});
  CMatrix t(2, 2);
  t << std::sqrt(6.0), -0.5, 0, 1;
  CHECK(max_abs(z2.value() - t.adjoint() * swap.matrix() * t) < 1e-12);
  auto ev = eigenvalues(z2.value());
  CHECK(std::abs(ev[0] + 3) < 1e-12);
  CHECK(std::abs(ev[1] - 2) < 1e-12);

  auto z3 = build_leaf_point(ShapeMatrix::from_exact({1, 2}, {1, 0}), std::vector<Rational>{7, 0});
  CHECK(z3.exact == gm({{7, 0}, {0, 0}}));

  CHECK_THROWS_AS(build_leaf_point(swap, std::vector<Rational>{1, 2}), SignMismatch);
  CHECK_THROWS_AS(build_leaf_point(ShapeMatrix::from_exact({1, 2}, {1, 0}), std::vector<Rational>{-1, 0}),
                  SignMismatch);
}

TEST_CASE("build and label round trip") {
  sample::Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    int N = 1 + t % 4;
    auto S = sample::shape(N, rng);
    auto lambda = sample::weight(S, rng);
    auto z = build_leaf_point(S, lambda);
    auto label = leaf_label(z);
    CAPTURE(S.to_json().dump());
    CHECK(label.shape.tau == S.tau);
    CHECK(label.shape.same_as(S, 1e-9));
    std::vector<double> want;
    for (const auto& x : lambda) want.push_back(x.get_d());
    std::sort(want.begin(), want.end());
    REQUIRE(label.weight.size() == want.size());
    for (std::size_t a = 0; a < want.size(); ++a) CHECK(std::abs(label.weight[a] - want[a]) <= 1e-9 * std::max(1.0, std::abs(want[a])));
  }
}

TEST_CASE("sign of the shape matches the sign of the spectrum") {
  sample::Rng rng(37);
  for (int t = 0; t < 100; ++t) {
    auto S = sample::shape(1 + t % 4, rng);
    auto z = sample::hermitian_of_shape(S, rng);
    auto sh = shape_of(HermitianMatrix::from_exact(z));
    CHECK(sh.signature() == sign_counts(z.to_complex()));
    CHECK(sh.signature() == sign_counts(S.matrix()));
  }
}

TEST_CASE("shape json") {
  auto S = ShapeMatrix::from_json({{"tau", {2, 1, 3}}, {"u", {"i", "-i", "-1"}}});
  CHECK(S.fully_exact());
  CHECK(ShapeMatrix::from_json(S.to_json()).same_as(S));
  CHECK_THROWS_AS(ShapeMatrix::from_json({{"tau", {2, 1}}, {"u", {"i", "i"}}}).validate(), IllFormedInstance);
  auto z = HermitianMatrix::from_exact(gm({{1, GaussRat(Rational(1, 2), 1)}, {GaussRat(Rational(1, 2), -1), -3}}));
  auto back = HermitianMatrix::from_json(z.to_json());
  CHECK(back.exact == z.exact);
  CHECK_THROWS_AS(HermitianMatrix::from_json({{"entries", {{{{"re", "1"}}, {{"re", "2"}}}, {{{"re", "3"}}, {{"re", "1"}}}}}}),
                  IllFormedInstance);
  CHECK_THROWS_AS(HermitianMatrix::from_json({{"entries", 3}}), ParseError);
}

TEST_CASE("bivector matches the entrywise formula") {
  sample::Rng rng(41);
  for (int N = 1; N <= 3; ++N)
    for (int t = 0; t < 5; ++t) {
      CMatrix z = sample::numeric_hermitian(N, rng);
      auto p = generator_point(z);
      for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
          for (int k = 1; k <= N; ++k)
            for (int l = 1; l <= N; ++l)
              CHECK(std::abs(bivector_entry(N, i, j, k, l).evaluate(p) - bivector_oracle(z, i, j, k, l)) < 1e-10);
    }
}

TEST_CASE("bracket examples at N = 2") {
  // i {Z11, Z12} = 2 Z11 Z12 and i {Z12, Z21} = 2 Z11^2 - 2 Z11 Z22.
  int z11 = 0, z12 = 1, z22 = 3;
  CommPoly a = CommPoly::variable(z11) * CommPoly::variable(z12) * GaussRat(2);
  CHECK(bivector_entry(2, 1, 1, 1, 2) == a);
  CommPoly b = CommPoly::variable(z11) * CommPoly::variable(z11) * GaussRat(2) -
               CommPoly::variable(z11) * CommPoly::variable(z22) * GaussRat(2);
  CHECK(bivector_entry(2, 1, 2, 2, 1) == b);
  CHECK(re_bracket(2, 1, 1, 1, 2) == a * GaussRat(0, -1));
}

TEST_CASE("bivector at special points") {
  for (int N = 1; N <= 3; ++N) {
    CHECK(poisson_bivector(CMatrix::Zero(N, N)).pi.cwiseAbs().maxCoeff() == 0.0);
    CHECK(poisson_bivector(CMatrix::Identity(N, N)).pi.cwiseAbs().maxCoeff() < 1e-14);
  }
  CMatrix d(2, 2);
  d << 1, 0, 0, -1;
  auto rep = poisson_bivector(d);
  // Coordinates: z11, Re z12, Im z12, z22. Only the off-diagonal pair mixes.
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      bool off = (a == 1 && b == 2) || (a == 2 && b == 1);
      if (!off) CHECK(std::abs(rep.pi(a, b)) < 1e-14);
    }
  CHECK(std::abs(rep.pi(1, 2)) > 1);
  sample::Rng rng(43);
  for (int t = 0; t < 20; ++t) {
    auto r = poisson_bivector(sample::numeric_hermitian(3, rng));
    CHECK(r.antisymmetry <= 1e-12);
    CHECK(r.imaginary <= 1e-12);
  }
}

TEST_CASE("real coordinates") {
  CMatrix z(2, 2);
  z << 1, Complex(2, 3), Complex(2, -3), 4;
  auto c = real_coordinates(z);
  REQUIRE(c.size() == 4);
  CHECK(c[0] == 1);
  CHECK(std::abs(c[1] - 2 * std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(c[2] - 3 * std::sqrt(2.0)) < 1e-15);
  CHECK(c[3] == 4);
}

TEST_CASE("leaf tangency") {
  auto zero = leaf_tangency_check(CMatrix::Zero(3, 3));
  CHECK(zero.dim_range == 0);
  CHECK(zero.dim_u == 0);
  CHECK(zero.dim_t == 0);
  CHECK(zero.ok());

  CMatrix d(2, 2);
  d << 1, 0, 0, -1;
  auto rd = leaf_tangency_check(d);
  CHECK(rd.ok());
  CHECK(rd.dim_range == rd.dim_intersection);
  CHECK(rd.dim_range == 2);

  sample::Rng rng(47);
  for (int N = 2; N <= 3; ++N)
    for (int t = 0; t < 20; ++t) {
      auto rep = leaf_tangency_check(sample::numeric_hermitian(N, rng));
      CAPTURE(rep.to_json().dump());
      CHECK(rep.ok());
    }
  // Rank-deficient points sit on lower-dimensional leaves.
  for (int t = 0; t < 10; ++t) {
    auto S = sample::shape(3, rng);
    auto z = sample::hermitian_of_shape(S, rng).to_complex();
    auto rep = leaf_tangency_check(z);
    CAPTURE(rep.to_json().dump());
    CHECK(rep.ok());
  }
}

TEST_CASE("Jacobi identity") {
  sample::Rng rng(53);
  for (int N = 1; N <= 3; ++N) {
    auto rep = jacobi_check(N, 100, rng);
    CAPTURE(N);
    CHECK(rep.symbolic_zero);
    CHECK(rep.max_residual <= 1e-8);
  }
  CommPoly f = CommPoly::constant(GaussRat(5));
  CHECK(f.derivative(0).is_zero());
}
