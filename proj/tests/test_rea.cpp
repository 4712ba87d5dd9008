#include <random>
#include <set>

#include "doctest.h"
#include "qrea/errors.hpp"
#include "qrea/qmatrix/frt.hpp"
#include "qrea/rea/identities.hpp"
#include "qrea/rea/reflection.hpp"
#include "qrea/rea/semiclassical.hpp"
#include "qrea/rea/shapes.hpp"
#include "qrea/rea/star.hpp"

using namespace qrea;

namespace {

RatFunc q(int e) { return RatFunc::q_power(e); }

NCPoly gen(int N, int i, int j) { return quantum_matrix_algebra(N).generator(i, j); }

NCPoly random_monomial(int N, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, N * N - 1);
  std::vector<int> g;
  for (int a = 0; a < degree; ++a) g.push_back(d(rng));
  return quantum_matrix_algebra(N).nf(NCPoly::monomial(word::make(g)));
}

std::size_t count_failures(const std::vector<Certificate>& certs, std::string* first = nullptr) {
  std::size_t n = 0;
  for (const auto& c : certs)
    if (!c.passed() && n++ == 0 && first) *first = c.to_json().dump();
  return n;
}

MinorLabel Z(std::initializer_list<int> rows, std::initializer_list<int> cols) {
  return {IndexSet(rows), IndexSet(cols)};
}

}  // namespace

TEST_CASE("star product unit") {
  for (int N = 1; N <= 3; ++N) {
    const auto& star = star_product(N);
    NCPoly one = NCPoly::constant(1);
    std::mt19937_64 rng(11 + N);
    for (int t = 0; t < 10; ++t) {
      NCPoly f = random_monomial(N, 1 + t % 2, rng);
      CHECK(star(one, f) == f);
      CHECK(star(f, one) == f);
    }
  }
}

TEST_CASE("star product is associative on random monomials") {
  for (int N = 2; N <= 3; ++N) {
    const auto& star = star_product(N);
    std::mt19937_64 rng(100 + N);
    int trials = N == 2 ? 20 : 8;
    for (int t = 0; t < trials; ++t) {
      NCPoly a = random_monomial(N, 1 + t % 2, rng), b = random_monomial(N, 1, rng),
             c = random_monomial(N, 1 + (t / 2) % 2, rng);
      CAPTURE(N);
      CAPTURE(t);
      REQUIRE(star(star(a, b), c) == star(a, star(b, c)));
    }
  }
}

TEST_CASE("star commutator of X11 and X12") {
  const auto& star = star_product(2);
  const auto& A = quantum_matrix_algebra(2);
  NCPoly x11 = gen(2, 1, 1), x12 = gen(2, 1, 2);
  NCPoly comm = star(x11, x12) - star(x12, x11);
  NCPoly expect = A.mul(x11, x12) * (RatFunc(1) - q(-2));
  CHECK(comm == expect);
}

TEST_CASE("star product of minors agrees with the polynomial route") {
  for (int N = 2; N <= 3; ++N) {
    const auto& star = star_product(N);
    const auto& A = quantum_matrix_algebra(N);
    for (int k = 1; k <= std::min(N, 2); ++k)
      for (IndexSet a : combinations(N, k))
        for (IndexSet b : combinations(N, k))
          for (IndexSet c : combinations(N, 1))
            for (IndexSet d : combinations(N, 1)) {
              CAPTURE(a.to_string());
              CAPTURE(b.to_string());
              REQUIRE(star.minors(a, b, c, d) == star(A.minor(a, b), A.minor(c, d)));
            }
  }
}

TEST_CASE("reflection equation holds with Z on the second and third legs") {
  for (int N = 1; N <= 3; ++N) {
    auto rep = reflection_check_star(N, ReflectionLeg::Z23);
    CAPTURE(N);
    CHECK_MESSAGE(rep.holds(), rep.first_nonzero);
  }
  auto bad = reflection_check_star(2, ReflectionLeg::Z13);
  CHECK_FALSE(bad.holds());
  CHECK(bad.nonzero_entries == 10);
  CHECK(parse_leg(leg_name(ReflectionLeg::Z13)) == ReflectionLeg::Z13);
  CHECK_THROWS_AS(parse_leg("Z12"), ParseError);
}

TEST_CASE("rewriting system of the reflection equation algebra") {
  const auto& r1 = derive_rea_rewrite(1, ReflectionLeg::Z23);
  CHECK(r1.rs.num_rules() == 0);
  auto r2 = derive_rea_rewrite(2, ReflectionLeg::Z23);
  CHECK(r2.rs.num_rules() == 6);
  CHECK(r2.confluence.ok());
  CHECK(r2.dimension.ok());
  CHECK(r2.star_consistent());
  const auto& r3 = rea_rewrite(3);
  CHECK(r3.rs.num_rules() == binomial(9, 2));
  CHECK(r3.confluence.ok());
  CHECK(r3.dimension.ok());
  CHECK(r3.star_consistent());
  CHECK_THROWS_AS(derive_rea_rewrite(2, ReflectionLeg::Z13), NonOrientable);
}

TEST_CASE("reflection equation algebra identities at N = 2") {
  for (const auto& fam : rea_identity_families()) {
    auto insts = rea_identity_sweep(fam, 2, 2);
    std::string first;
    CAPTURE(fam);
    CHECK(insts.size() > 0);
    CHECK_MESSAGE(count_failures(verify_all(insts, verify_rea_identity), &first) == 0, first);
  }
}

TEST_CASE("general commutation relation at N = 3 for singletons and pairs") {
  auto insts = rea_identity_sweep("gencomm", 3, 2);
  std::string first;
  CHECK(insts.size() > 0);
  CHECK_MESSAGE(count_failures(verify_all(insts, verify_rea_identity), &first) == 0, first);
}

TEST_CASE("off-diagonal braided Muir expansion vanishes") {
  IdentityInstance inst{"muirbr", 3, {{"I", {1, 2, 3}}, {"J", {1, 2, 3}}, {"F", {1}}, {"G", {1}}, {"K", {1}}, {"K'", {2}}}};
  auto sides = rea_identity_sides(inst);
  CHECK(sides.lhs.is_zero());
  CHECK(sides.rhs.is_zero());
}

TEST_CASE("shape families at N = 3") {
  auto shapes = enumerate_shapes(3);
  REQUIRE(shapes.size() == 13);
  std::map<int, int> by_rank;
  for (const auto& s : shapes) {
    ++by_rank[s.rank()];
    CHECK(s.self_adjoint());
    CHECK_NOTHROW(s.validate());
  }
  CHECK(by_rank[3] == 4);
  CHECK(by_rank[2] == 6);
  CHECK(by_rank[1] == 3);

  // Z_{tau(P_[k]), P_[k]}, worked out by hand for each family.
  std::vector<std::vector<MinorLabel>> expect = {
      {Z({1}, {1}), Z({1, 2}, {1, 2}), Z({1, 2, 3}, {1, 2, 3})},
      {Z({2}, {1}), Z({1, 2}, {1, 2}), Z({1, 2, 3}, {1, 2, 3})},
      {Z({3}, {1}), Z({2, 3}, {1, 2}), Z({1, 2, 3}, {1, 2, 3})},
      {Z({1}, {1}), Z({1, 3}, {1, 2}), Z({1, 2, 3}, {1, 2, 3})},
      {Z({1}, {1}), Z({1, 2}, {1, 2})},
      {Z({1}, {1}), Z({1, 3}, {1, 3})},
      {Z({2}, {2}), Z({2, 3}, {2, 3})},
      {Z({2}, {1}), Z({1, 2}, {1, 2})},
      {Z({3}, {1}), Z({1, 3}, {1, 3})},
      {Z({3}, {2}), Z({2, 3}, {2, 3})},
      {Z({1}, {1})},
      {Z({2}, {2})},
      {Z({3}, {3})},
  };
  std::vector<std::vector<std::string>> u = {
      {"s1", "s2", "s3"}, {"y", "ybar", "s1"}, {"y", "s1", "ybar"}, {"s1", "y", "ybar"},
      {"s1", "s2", "0"},  {"s1", "0", "s2"},   {"0", "s1", "s2"},   {"y", "ybar", "0"},
      {"y", "0", "ybar"}, {"0", "y", "ybar"},  {"s1", "0", "0"},    {"0", "s1", "0"},
      {"0", "0", "s1"},
  };
  for (std::size_t f = 0; f < shapes.size(); ++f) {
    CAPTURE(f);
    CHECK(shapes[f].u == u[f]);
    REQUIRE(shapes[f].rank() == static_cast<int>(expect[f].size()));
    for (int k = 1; k <= shapes[f].rank(); ++k) CHECK(shapes[f].label(k) == expect[f][static_cast<std::size_t>(k - 1)]);
  }
  CHECK(minor_label_string(shapes[2].label(2)) == "Z_{23,12}");
}

TEST_CASE("shape enumeration at small N") {
  CHECK(enumerate_shapes(1).size() == 1);
  CHECK(enumerate_shapes(1, true).size() == 2);
  // Self-adjoint shapes on [2]: rank 2 identity and swap, rank 1 twice.
  CHECK(enumerate_shapes(2).size() == 4);
  // Sum over supports of the number of involutions on the support.
  std::size_t expect4 = 0;
  const int inv[] = {1, 1, 2, 4, 10};
  for (int m = 1; m <= 4; ++m) expect4 += binomial(4, m) * static_cast<std::size_t>(inv[m]);
  CHECK(enumerate_shapes(4).size() == expect4);
}

TEST_CASE("shape json round trip and validation") {
  for (const auto& s : enumerate_shapes(3)) CHECK(QuantumShape::from_json(s.to_json()) == s);
  auto s = QuantumShape::from_json({{"tau", {2, 1, 3}}, {"u", {"y", "ybar", "1"}}});
  CHECK(s.N == 3);
  CHECK(s.rank() == 3);
  CHECK_THROWS_AS(QuantumShape::from_json({{"tau", {2, 1, 3}}, {"u", {"y", "0", "1"}}}).validate(), IllFormedInstance);
  CHECK_THROWS_AS(QuantumShape::from_json({{"tau", {2, 3, 1}}, {"u", {"y", "ybar", "1"}}}).validate(),
                  IllFormedInstance);
  CHECK_THROWS_AS(QuantumShape::from_json({{"tau", {1, 2}}, {"u", {"z", "1"}}}).validate(), IllFormedInstance);
}

TEST_CASE("shape ideals") {
  auto full = QuantumShape::from_json({{"tau", {1, 2}}, {"u", {"s1", "s2"}}});
  CHECK(build_shape_ideal(full).generators.empty());

  auto s = QuantumShape::from_json({{"tau", {1, 2, 3}}, {"u", {"0", "s1", "s2"}}});
  auto lex = build_shape_ideal(s, IdealFlavor::Lex);
  std::set<MinorLabel> singles;
  for (const auto& g : lex.generators)
    if (g.first.size() == 1) singles.insert(g);
  std::set<MinorLabel> expect = {Z({1}, {1}), Z({1}, {2}), Z({1}, {3}), Z({2}, {1}), Z({3}, {1})};
  CHECK(singles == expect);
  CHECK(lex.covers(Z({1, 2, 3}, {1, 2, 3})));
  CHECK_FALSE(lex.covers(Z({2}, {2})));
  CHECK_FALSE(lex.covers(Z({2, 3}, {2, 3})));

  for (const auto& sh : enumerate_shapes(3)) {
    auto dom = build_shape_ideal(sh, IdealFlavor::Dominance);
    auto lx = build_shape_ideal(sh, IdealFlavor::Lex);
    std::set<MinorLabel> d(dom.generators.begin(), dom.generators.end()), l(lx.generators.begin(), lx.generators.end());
    for (const auto& g : d) {
      CHECK(d.count({g.second, g.first}) == 1);
      CHECK(l.count(g) == 1);
    }
    for (int k = 1; k <= sh.rank(); ++k) CHECK_FALSE(dom.covers(sh.label(k)));
  }
  CHECK(parse_flavor(flavor_name(IdealFlavor::Lex)) == IdealFlavor::Lex);
}

TEST_CASE("q-commutation exponents") {
  MinorLabel zs = Z({2}, {1});
  CHECK(qcomm_exponent(zs, IndexSet{1}, IndexSet{2}) == 0);
  CHECK(qcomm_exponent(zs, IndexSet{1, 2}, IndexSet{3}) == 2);
  CHECK(qcomm_exponent(zs, IndexSet{3}, IndexSet{1, 2}) == -2);
}

TEST_CASE("q-commutation certificates for every N = 3 shape") {
  std::size_t total = 0;
  for (const auto& s : enumerate_shapes(3)) {
    auto certs = shape_qcomm_sweep(s, 2);
    total += certs.size();
    std::string first;
    CAPTURE(s.to_json().dump());
    CHECK_MESSAGE(count_failures(certs, &first) == 0, first);
  }
  CHECK(total == 486);
}

TEST_CASE("q-commutation certificate needs the ideal") {
  auto shapes = enumerate_shapes(3);
  std::size_t not_passed = 0;
  for (const auto& s : shapes) {
    ShapeIdeal empty{s, IdealFlavor::Dominance, {}};
    for (int k = 1; k <= s.rank(); ++k)
      for (IndexSet I : combinations(3, 1))
        for (IndexSet J : combinations(3, 1))
          not_passed += !qcomm_certificate_for_label(empty, s.label(k), I, J).passed();
  }
  CHECK(not_passed > 0);
}

TEST_CASE("semiclassical limit of the star commutator") {
  for (int N = 1; N <= 3; ++N) {
    auto certs = semiclassical_sweep(N);
    std::string first;
    CAPTURE(N);
    CHECK(certs.size() == static_cast<std::size_t>(N * N * N * N));
    CHECK_MESSAGE(count_failures(certs, &first) == 0, first);
  }
}
