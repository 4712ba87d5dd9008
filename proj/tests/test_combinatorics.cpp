#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "qrea/combinatorics/index_set.hpp"
#include "qrea/errors.hpp"

using namespace qrea;

TEST_CASE("lexicographic order examples") {
  CHECK(lex_cmp({1, 3}, {2, 3}) < 0);
  CHECK(lex_cmp({1, 4}, {1, 4}) == 0);
  CHECK(lex_cmp({1, 4}, {2, 3}) < 0);
  CHECK(lex_cmp({2, 3}, {1, 4}) > 0);
  CHECK_THROWS_AS(lex_cmp({1}, {1, 2}), SizeMismatch);
}

TEST_CASE("lex order agrees with the prefix-inequality definition") {
  // I < J iff i_1<=j_1, ..., i_{p-1}<=j_{p-1}, i_p<j_p for some p.
  for (int k = 1; k <= 4; ++k)
    for (IndexSet a : combinations(6, k))
      for (IndexSet b : combinations(6, k)) {
        auto x = a.elements(), y = b.elements();
        bool less = false;
        for (int p = 0; p < k && !less; ++p) {
          bool prefix = true;
          for (int r = 0; r < p; ++r) prefix = prefix && x[r] <= y[r];
          less = prefix && x[p] < y[p];
        }
        REQUIRE((lex_cmp(a, b) < 0) == less);
      }
}

TEST_CASE("dominance examples") {
  CHECK(dom_cmp({1, 2}, {2, 3}) == Dominance::LessEq);
  CHECK(dom_cmp({1, 4}, {2, 3}) == Dominance::Incomparable);
  CHECK(dom_cmp({2, 5}, {2, 5}) == Dominance::Equal);
  CHECK(dom_cmp({2, 3}, {1, 2}) == Dominance::GreaterEq);
}

TEST_CASE("dominance refines into lex") {
  for (int k = 0; k <= 6; ++k)
    for (IndexSet a : combinations(6, k))
      for (IndexSet b : combinations(6, k)) {
        Dominance d = dom_cmp(a, b);
        if (d == Dominance::LessEq || d == Dominance::Equal) REQUIRE(lex_cmp(a, b) <= 0);
      }
}

TEST_CASE("subselect examples") {
  CHECK(subselect({2, 5, 7}, {1, 3}) == std::pair<IndexSet, IndexSet>({2, 7}, {5}));
  CHECK(subselect({2, 5, 7}, {1, 2, 3}) == std::pair<IndexSet, IndexSet>({2, 5, 7}, {}));
  CHECK(subselect({1, 2, 3, 4}, {2, 4}) == std::pair<IndexSet, IndexSet>({2, 4}, {1, 3}));
  CHECK_THROWS_AS(subselect({1, 2}, {3}), PositionOutOfRange);
}

TEST_CASE("weights split over sub-selection") {
  for (std::uint32_t b = 0; b < 64; ++b) {
    IndexSet I = IndexSet::from_bits(b);
    for (std::uint32_t kb = 0; kb < (1u << I.size()); ++kb) {
      auto [lo, hi] = subselect(I, IndexSet::from_bits(kb));
      REQUIRE(lo.weight() + hi.weight() == I.weight());
      REQUIRE(positions_of(I, lo) == IndexSet::from_bits(kb));
    }
  }
}

TEST_CASE("combinations are enumerated in lex order") {
  const auto& c = combinations(5, 2);
  CHECK(c.size() == 10);
  CHECK(c.front() == IndexSet{1, 2});
  CHECK(c.back() == IndexSet{4, 5});
  CHECK(std::is_sorted(c.begin(), c.end(), [](IndexSet a, IndexSet b) { return lex_cmp(a, b) < 0; }));
}

TEST_CASE("inversion counts") {
  CHECK(inversions(Bijection::identity({1, 2, 3})) == 0);
  CHECK(inversions(Bijection({1, 2, 3}, {1, 2, 3}, {2, 1, 3})) == 1);
  CHECK(inversions(Bijection({1, 2, 3, 4}, {1, 2, 3, 4}, {4, 3, 2, 1})) == 6);
}

TEST_CASE("inversion parity is a homomorphism") {
  std::mt19937_64 rng(5);
  IndexSet s = IndexSet::range(6);
  for (int t = 0; t < 500; ++t) {
    std::vector<int> a = s.elements(), b = s.elements();
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    Bijection sigma(s, s, a), tau(s, s, b);
    int lhs = inversions(sigma.compose_after(tau));
    REQUIRE((lhs - inversions(sigma) - inversions(tau)) % 2 == 0);
  }
}

TEST_CASE("partition lemma examples") {
  auto rep = check_comb_lemma({2}, {1});
  CHECK(rep.ok());
  REQUIRE(rep.admissible.size() == 1);
  CHECK(rep.admissible[0] == IndexSet{1});
  auto same = check_comb_lemma({1, 3}, {1, 3});
  CHECK(same.ok());
  CHECK(same.admissible.size() == 1);
}

TEST_CASE("partition lemma holds for all subsets of [7]") {
  int bad = 0;
  for (std::uint32_t a = 0; a < 128; ++a)
    for (std::uint32_t b = 0; b < 128; ++b) {
      auto rep = check_comb_lemma(IndexSet::from_bits(a), IndexSet::from_bits(b));
      if (!rep.ok()) ++bad;
      // The partition P with T_P = J \ S is always admissible, so the list is never empty.
      REQUIRE(rep.admissible.size() == 1);
    }
  CHECK(bad == 0);
}

TEST_CASE("bitmask lex order differs from storage order") {
  // {1,4} < {2,3} lexicographically although 0b1001 > 0b0110.
  IndexSet a{1, 4}, b{2, 3};
  CHECK(lex_cmp(a, b) < 0);
  CHECK(b < a);
}

TEST_CASE("index set json") {
  IndexSet s{1, 3, 4};
  CHECK(s.to_json() == nlohmann::json::array({1, 3, 4}));
  CHECK(IndexSet::from_json(s.to_json()) == s);
  CHECK_THROWS_AS(IndexSet::from_json(nlohmann::json::array({3, 1})), ParseError);
}
