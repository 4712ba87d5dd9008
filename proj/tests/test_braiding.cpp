#include <array>

#include "doctest.h"
#include "qrea/braiding/braid.hpp"
#include "qrea/errors.hpp"

using namespace qrea;

namespace {

RatFunc q(int e) { return RatFunc::q_power(e); }

// Oracle for the braid operator: the operator-sum formula applied literally,
// sum_ij q^{-d_ij} e_ji (x) e_ij + (q^-1 - q) sum_{i<j} e_jj (x) e_ii.
RatFunc literal_entry(int a, int b, int c, int d) {
  int N = std::max({a, b, c, d});
  RatFunc v;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      // (e_ji (x) e_ij)(e_c (x) e_d) = [i=c][j=d] e_j (x) e_i
      if (i == c && j == d && a == j && b == i) v += q(i == j ? -1 : 0);
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      if (j == c && i == d && a == j && b == i) v += q(-1) - q(1);
  return v;
}

}  // namespace

TEST_CASE("braid operator matches the operator-sum formula") {
  for (int N = 1; N <= 4; ++N) {
    const BraidOperator& R = braid_operator(N);
    for (int a = 1; a <= N; ++a)
      for (int b = 1; b <= N; ++b)
        for (int c = 1; c <= N; ++c)
          for (int d = 1; d <= N; ++d) REQUIRE(R.entry(a, b, c, d) == literal_entry(a, b, c, d));
  }
}

TEST_CASE("braid operator examples") {
  const BraidOperator& R = braid_operator(2);
  // R(e2 (x) e1) = e1 (x) e2 + (q^-1 - q) e2 (x) e1
  CHECK(R.entry(1, 2, 2, 1) == RatFunc(1));
  CHECK(R.entry(2, 1, 2, 1) == q(-1) - q(1));
  CHECK(R.entry(1, 1, 1, 1) == q(-1));
  CHECK(R.column(1, 1).size() == 1);
  const BraidOperator& R1 = braid_operator(1);
  CHECK(R1.entry(1, 1, 1, 1) == q(-1));
}

TEST_CASE("braid relation, Hecke identity, symmetry, inverse") {
  for (int N = 1; N <= 4; ++N) {
    CAPTURE(N);
    CHECK(braid_relation_check(N));
    CHECK(hecke_check(N));
    CHECK(braid_symmetry_check(N));
    CHECK(braid_inverse_check(N));
  }
}

TEST_CASE("inverse equals R + q - q^-1") {
  const BraidOperator& R = braid_operator(3);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c)
        for (int d = 1; d <= 3; ++d) {
          RatFunc expect = R.entry(a, b, c, d) + ((a == c && b == d) ? q(1) - q(-1) : RatFunc());
          REQUIRE(R.inverse_entry(a, b, c, d) == expect);
        }
}

TEST_CASE("wedge reduction") {
  WedgeVector v = wedge_reduce({2, 1});
  REQUIRE(v.coeffs.size() == 1);
  CHECK(v.coeffs.at(IndexSet{1, 2}) == -q(1));
  CHECK(wedge_reduce({1, 1}).coeffs.empty());
  CHECK(wedge_reduce({3, 2, 1}).coeffs.at(IndexSet{1, 2, 3}) == -q(3));
  CHECK(wedge_reduce({1, 2}).coeffs.at(IndexSet{1, 2}) == RatFunc(1));
}

TEST_CASE("embedding and projection") {
  WedgeVector e1;
  e1.degree = 1;
  e1.add({3}, 1);
  Tensor t1 = wedge_embed(e1);
  CHECK(t1 == Tensor::basis({3}));

  WedgeVector e12;
  e12.degree = 2;
  e12.add({1, 2}, 1);
  Tensor t = wedge_embed(e12);
  RatFunc n = RatFunc(1) / (RatFunc(1) + q(2));
  CHECK(t.coeffs.at(seq::pack({1, 2})) == n);
  CHECK(t.coeffs.at(seq::pack({2, 1})) == -q(1) * n);
  CHECK(t.coeffs.size() == 2);

  for (int k = 0; k <= 4; ++k)
    for (IndexSet I : combinations(4, k)) {
      WedgeVector v;
      v.degree = k;
      v.add(I, q(-2) + RatFunc(3));
      REQUIRE(wedge_project(wedge_embed(v)) == v);
    }
}

TEST_CASE("antisymmetrizer is a (-q)-eigenvector of every elementary braid") {
  for (int N = 2; N <= 4; ++N) {
    const BraidOperator& R = braid_operator(N);
    for (int k = 2; k <= 3; ++k)
      for (IndexSet I : combinations(N, k)) {
        Tensor a = antisymmetrizer(I);
        for (int p = 0; p + 1 < k; ++p) {
          Tensor expect = a;
          expect.scale(-q(1));
          REQUIRE(R.apply(a, p) == expect);
        }
      }
  }
}

TEST_CASE("block braid preserves the image of the embedding") {
  for (int N = 2; N <= 4; ++N) {
    const BraidOperator& R = braid_operator(N);
    for (int k = 1; k <= 3; ++k)
      for (int l = 1; l <= 3 && k + l <= 5; ++l)
        for (IndexSet I : combinations(N, k))
          for (IndexSet J : combinations(N, l)) {
            WedgePair v;
            v.k = k;
            v.l = l;
            v.add(I, J, 1);
            Tensor out = block_braid(R, wedge_embed_pair(v), k, l);
            Tensor round = wedge_embed_pair(wedge_project_pair(out, l));
            REQUIRE(round == out);
          }
  }
}

TEST_CASE("block braid at k = l = 1 is the braid operator") {
  const WedgeBraidTable& t = wedge_braiding(3, 1, 1);
  const BraidOperator& R = braid_operator(3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
          // value(I,J,I',J') = coefficient of e_I' (x) e_J in R(e_I (x) e_J')
          REQUIRE(t.value({i}, {j}, {a}, {b}) == R.entry(a, j, i, b));
          REQUIRE(t.inverse({i}, {j}, {a}, {b}) == R.inverse_entry(j, a, b, i));
        }
}

TEST_CASE("wedge tables: support, diagonals, composition") {
  for (int N = 1; N <= 4; ++N)
    for (int k = 0; k <= std::min(N, 3); ++k)
      for (int l = 0; l <= std::min(N, 3); ++l) {
        CAPTURE(N);
        CAPTURE(k);
        CAPTURE(l);
        TableReport rep = check_wedge_table(wedge_braiding(N, k, l));
        CHECK_MESSAGE(rep.ok(), rep.first_failure);
      }
}

TEST_CASE("wedge table examples") {
  CHECK(wedge_braiding(3, 2, 2).value({1, 2}, {1, 2}, {2, 3}, {2, 3}) == q(-1));
  CHECK(wedge_braiding(3, 2, 2).value({1, 2}, {1, 2}, {1, 2}, {1, 2}) == q(-2));
  CHECK_THROWS_AS(wedge_braiding(2, 3, 1), DegreeOutOfRange);
}

TEST_CASE("R-matrix lemma examples") {
  auto rep = rmatrix_lemma_check(2, {1}, {2});
  CHECK(rep.pass);
  CHECK(rep.scalar == -q(-1));
  // R^-1 xi = e1 (x) e2 - q e2 (x) e1
  CHECK(rep.image.coeffs.at({IndexSet{1}, IndexSet{2}}) == RatFunc(1));
  CHECK(rep.image.coeffs.at({IndexSet{2}, IndexSet{1}}) == -q(1));
  auto same = rmatrix_lemma_check(3, {1, 3}, {1, 3});
  CHECK(same.pass);
  CHECK(same.scalar == q(2));
}

TEST_CASE("R-matrix lemma for all subsets of [4]") {
  int fails = 0;
  for (std::uint32_t a = 0; a < 16; ++a)
    for (std::uint32_t b = 0; b < 16; ++b)
      if (!rmatrix_lemma_check(4, IndexSet::from_bits(a), IndexSet::from_bits(b)).pass) ++fails;
  CHECK(fails == 0);
}

TEST_CASE("inverse braiding of the antisymmetric sum on disjoint sets") {
  // The disjoint case of the lemma computed directly on tensors, not through the table.
  const BraidOperator& R = braid_operator(4);
  for (std::uint32_t tb = 1; tb < 16; ++tb) {
    IndexSet T = IndexSet::from_bits(tb);
    int r = T.size();
    for (int l = 0; l <= r; ++l) {
      int lp = r - l;
      WedgePair xi, xip;
      xi.k = l;
      xi.l = lp;
      xip.k = lp;
      xip.l = l;
      for (IndexSet P : combinations(r, l)) {
        auto [a, b] = subselect(T, P);
        xi.add(a, b, minus_q_power(P.weight()));
      }
      for (IndexSet P : combinations(r, lp)) {
        auto [a, b] = subselect(T, P);
        xip.add(a, b, minus_q_power(P.weight()));
      }
      Tensor img = block_braid_inverse(R, wedge_embed_pair(xi), lp, l);
      WedgePair got = wedge_project_pair(img, lp);
      RatFunc s = minus_q_power(l * (l + 1) / 2 - lp * (lp + 1) / 2 - l * lp);
      for (auto& [k, v] : xip.coeffs) v *= s;
      REQUIRE(got == xip);
    }
  }
}

TEST_CASE("table json dump") {
  auto j = wedge_braiding(2, 1, 1).to_json();
  CHECK(j["N"] == 2);
  CHECK(j["entries"].size() == wedge_braiding(2, 1, 1).entries().size());
  CHECK(j["entries"][0].contains("I'"));
}
