#include "qrea/qmatrix/rewrite.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "qrea/coeff/matrix.hpp"
#include "qrea/errors.hpp"

namespace qrea {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

RewriteSystem RewriteSystem::from_relations(int n, const std::vector<NCPoly>& relations) {
  if (n > 16) throw DegreeOutOfRange("at most 16 generators");
  // Columns are degree-2 words in decreasing order, so the pivot of a row is its greatest word.
  std::vector<Word> cols;
  for (int a = n - 1; a >= 0; --a)
    for (int b = n - 1; b >= 0; --b) cols.push_back(word::make({a, b}));
  std::unordered_map<Word, std::size_t> col_of;
  for (std::size_t c = 0; c < cols.size(); ++c) col_of[cols[c]] = c;

  std::vector<const NCPoly*> nonzero;
  for (const NCPoly& r : relations)
    if (!r.is_zero()) nonzero.push_back(&r);
  RatMatrix m(nonzero.size(), cols.size());
  for (std::size_t i = 0; i < nonzero.size(); ++i)
    for (const auto& [w, c] : nonzero[i]->terms()) {
      if (word::length(w) != 2) throw IllFormedInstance("relation is not homogeneous of degree 2");
      m(i, col_of.at(w)) = c;
    }
  auto pivots = m.rref();

  RewriteSystem rs;
  rs.n_ = n;
  rs.rules_.assign(static_cast<std::size_t>(n * n), {});
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    Word lead = cols[pivots[r]];
    int g1 = word::letter(lead, 0), g2 = word::letter(lead, 1);
    if (g1 <= g2)
      throw NonOrientable("leading word " + std::to_string(g1) + "," + std::to_string(g2) + " is not a descent");
    std::vector<Term> rhs;
    for (std::size_t c = pivots[r] + 1; c < cols.size(); ++c) {
      if (m(r, c).is_zero()) continue;
      int a = word::letter(cols[c], 0), b = word::letter(cols[c], 1);
      rhs.push_back({a, b, -m(r, c)});
    }
    for (const Term& t : rhs)
      if (t.a > t.b) throw FlatnessCheckFailed("rule right-hand side contains an unreduced descent");
    rs.rules_[static_cast<std::size_t>(g1 * n + g2)] = std::move(rhs);
    // Mark presence of a rule even when the right-hand side is zero.
    if (rs.rules_[static_cast<std::size_t>(g1 * n + g2)].empty())
      rs.rules_[static_cast<std::size_t>(g1 * n + g2)].push_back({g2, g1, RatFunc()});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < a; ++b)
      if (rs.rule(a, b).empty()) throw FlatnessCheckFailed("descent without a rewriting rule");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < a; ++b) {
      NCPoly rel = NCPoly::monomial(word::make({a, b}));
      rel -= rs.rule_rhs(a, b);
      rs.relations_.push_back(std::move(rel));
    }
  return rs;
}

std::size_t RewriteSystem::num_rules() const {
  std::size_t c = 0;
  for (const auto& r : rules_) c += r.empty() ? 0 : 1;
  return c;
}

NCPoly RewriteSystem::rule_rhs(int g1, int g2) const {
  NCPoly p;
  for (const Term& t : rule(g1, g2)) p.add(word::make({t.a, t.b}), t.c);
  return p;
}

NCPoly RewriteSystem::insert(int g, Word m) const {
  int len = word::length(m);
  if (len == 0 || g <= word::letter(m, 0)) return NCPoly::monomial(word::concat(word::single(g), m));
  Word key = word::concat(word::single(g), m);
  {
    std::shared_lock lock(memo_->mu);
    auto it = memo_->insert.find(key);
    if (it != memo_->insert.end()) return it->second;
  }
  int m0 = word::letter(m, 0);
  Word rest = word::sub(m, 1, len - 1);
  NCPoly out;
  for (const Term& t : rule(g, m0)) {
    if (t.c.is_zero()) continue;
    NCPoly inner = insert(t.b, rest);
    for (const auto& [u, cu] : inner.terms()) out.add_scaled(insert(t.a, u), t.c * cu);
  }
  std::unique_lock lock(memo_->mu);
  memo_->insert.emplace(key, out);
  return out;
}

NCPoly RewriteSystem::insert_word(Word u, Word v) const {
  NCPoly cur = NCPoly::monomial(v);
  for (int p = word::length(u) - 1; p >= 0; --p) {
    NCPoly next;
    int g = word::letter(u, p);
    for (const auto& [w, c] : cur.terms()) next.add_scaled(insert(g, w), c);
    cur = std::move(next);
  }
  return cur;
}

NCPoly RewriteSystem::normal_form(Word w) const { return insert_word(w, word::empty()); }

NCPoly RewriteSystem::normal_form(const NCPoly& p) const {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) out.add_scaled(normal_form(w), c);
  return out;
}

NCPoly RewriteSystem::multiply(const NCPoly& a, const NCPoly& b) const {
  NCPoly out;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) out.add_scaled(insert_word(u, v), cu * cv);
  return out;
}

NCPoly RewriteSystem::reduce(const NCPoly& p, Strategy s) const {
  NCPoly cur = p;
  for (;;) {
    Word target = 0;
    int pos = -1;
    for (Word w : cur.sorted_words()) {
      int len = word::length(w);
      if (s == Strategy::Leftmost) {
        for (int i = 0; i + 1 < len; ++i)
          if (word::letter(w, i) > word::letter(w, i + 1)) {
            pos = i;
            break;
          }
      } else {
        for (int i = len - 2; i >= 0; --i)
          if (word::letter(w, i) > word::letter(w, i + 1)) {
            pos = i;
            break;
          }
      }
      if (pos >= 0) {
        target = w;
        break;
      }
    }
    if (pos < 0) return cur;
    RatFunc c = cur.coefficient(target);
    cur.add(target, -c);
    int len = word::length(target);
    Word left = word::sub(target, 0, pos);
    Word right = word::sub(target, pos + 2, len - pos - 2);
    for (const Term& t : rule(word::letter(target, pos), word::letter(target, pos + 1))) {
      if (t.c.is_zero()) continue;
      cur.add(word::concat(word::concat(left, word::make({t.a, t.b})), right), c * t.c);
    }
  }
}

namespace {

std::vector<Word> all_words(int n, int d) {
  std::vector<Word> out;
  std::vector<int> letters(static_cast<std::size_t>(d), 0);
  for (;;) {
    out.push_back(word::make(letters));
    int p = d - 1;
    while (p >= 0 && letters[static_cast<std::size_t>(p)] == n - 1) letters[static_cast<std::size_t>(p--)] = 0;
    if (p < 0) break;
    ++letters[static_cast<std::size_t>(p)];
  }
  return out;
}

}  // namespace

ConfluenceReport check_confluence(const RewriteSystem& rs, int degree, int N, char alphabet) {
  ConfluenceReport rep;
  for (Word w : all_words(rs.num_generators(), degree)) {
    ++rep.words_checked;
    NCPoly m = NCPoly::monomial(w);
    NCPoly a = rs.reduce(m, RewriteSystem::Strategy::Leftmost);
    NCPoly b = rs.reduce(m, RewriteSystem::Strategy::Rightmost);
    NCPoly c = rs.normal_form(w);
    if (!(a == b) || !(a == c)) {
      if (rep.failures++ == 0)
        rep.first_failure = NCPoly::monomial(w).to_string(N, alphabet) + ": " + a.to_string(N, alphabet) +
                            " vs " + b.to_string(N, alphabet);
    }
  }
  return rep;
}

DimensionReport check_dimension(const RewriteSystem& rs, int degree, const Rational& q0, std::uint64_t prime) {
  int n = rs.num_generators();
  DimensionReport rep;
  rep.degree = degree;
  rep.expected = binomial(n + degree - 1, degree);
  std::uint64_t total = 1;
  for (int i = 0; i < degree; ++i) total *= static_cast<std::uint64_t>(n);
  if (degree < 2) {
    rep.quotient_dimension = total;
    return rep;
  }
  auto code = [n](Word w) {
    std::uint64_t c = 0;
    for (int p = 0; p < word::length(w); ++p) c = c * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(word::letter(w, p));
    return c;
  };
  std::vector<std::pair<std::vector<std::pair<Word, std::uint64_t>>, int>> rels;
  for (const NCPoly& r : rs.relations()) {
    std::vector<std::pair<Word, std::uint64_t>> terms;
    for (const auto& [w, c] : r.terms()) terms.push_back({w, to_mod_p(c.evaluate(q0), prime)});
    rels.push_back({terms, 0});
  }
  std::vector<std::vector<std::uint64_t>> rows;
  for (int a = 0; a <= degree - 2; ++a) {
    auto lefts = all_words(n, a);
    auto rights = all_words(n, degree - 2 - a);
    for (Word u : lefts)
      for (Word v : rights)
        for (const auto& rel : rels) {
          std::vector<std::uint64_t> row(total, 0);
          for (const auto& [w, c] : rel.first) row[code(word::concat(word::concat(u, w), v))] = c;
          rows.push_back(std::move(row));
        }
  }
  rep.quotient_dimension = total - rank_mod_p(std::move(rows), prime);
  return rep;
}

}  // namespace qrea
