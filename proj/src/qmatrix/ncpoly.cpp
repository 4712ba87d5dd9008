#include "qrea/qmatrix/ncpoly.hpp"

#include <algorithm>
#include <sstream>

#include "qrea/errors.hpp"

namespace qrea {

namespace word {

Word make(const std::vector<int>& letters) {
  if (static_cast<int>(letters.size()) > kMaxLength) throw DegreeOutOfRange("word longer than 15 letters");
  Word w = static_cast<Word>(letters.size()) << 60;
  for (std::size_t p = 0; p < letters.size(); ++p) {
    if (letters[p] < 0 || letters[p] > 15) throw PositionOutOfRange("generator index outside 0..15");
    w |= static_cast<Word>(letters[p]) << (56 - 4 * p);
  }
  return w;
}

std::vector<int> letters(Word w) {
  std::vector<int> out(static_cast<std::size_t>(length(w)));
  for (int p = 0; p < length(w); ++p) out[static_cast<std::size_t>(p)] = letter(w, p);
  return out;
}

Word single(int g) { return (Word{1} << 60) | (static_cast<Word>(g) << 56); }

Word concat(Word a, Word b) {
  int la = length(a), lb = length(b);
  if (la + lb > kMaxLength) throw DegreeOutOfRange("word longer than 15 letters");
  Word body_a = a & ((Word{1} << 60) - 1);
  Word body_b = b & ((Word{1} << 60) - 1);
  return (static_cast<Word>(la + lb) << 60) | body_a | (body_b >> (4 * la));
}

Word sub(Word w, int from, int len) {
  Word body = (w << (4 * from)) & ((Word{1} << 60) - 1);
  if (len < kMaxLength) body &= ~((Word{1} << (60 - 4 * len)) - 1);
  return (static_cast<Word>(len) << 60) | body;
}

bool is_sorted(Word w) {
  for (int p = 1; p < length(w); ++p)
    if (letter(w, p - 1) > letter(w, p)) return false;
  return true;
}

}  // namespace word

Word word_from_indices(int N, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw SizeMismatch("row and column sequences differ in length");
  std::vector<int> g(rows.size());
  for (std::size_t p = 0; p < rows.size(); ++p) g[p] = gen_index(N, rows[p], cols[p]);
  return word::make(g);
}

std::vector<int> word_rows(int N, Word w) {
  std::vector<int> out;
  for (int g : word::letters(w)) out.push_back(gen_row(N, g));
  return out;
}

std::vector<int> word_cols(int N, Word w) {
  std::vector<int> out;
  for (int g : word::letters(w)) out.push_back(gen_col(N, g));
  return out;
}

NCPoly NCPoly::constant(const RatFunc& c) { return monomial(word::empty(), c); }

NCPoly NCPoly::monomial(Word w, const RatFunc& c) {
  NCPoly p;
  p.add(w, c);
  return p;
}

RatFunc NCPoly::coefficient(Word w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFunc() : it->second;
}

std::vector<Word> NCPoly::sorted_words() const {
  std::vector<Word> ws;
  ws.reserve(terms_.size());
  for (const auto& [w, c] : terms_) ws.push_back(w);
  std::sort(ws.begin(), ws.end());
  return ws;
}

void NCPoly::add(Word w, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NCPoly::add_scaled(const NCPoly& p, const RatFunc& c) {
  if (c.is_zero()) return;
  for (const auto& [w, v] : p.terms_) add(w, v * c);
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, v] : o.terms_) add(w, v);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, v] : o.terms_) add(w, -v);
  return *this;
}

NCPoly& NCPoly::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add(word::concat(wa, wb), ca * cb);
  return out;
}

std::string generator_name(int N, int g, char alphabet) {
  return std::string(1, alphabet) + std::to_string(gen_row(N, g)) + std::to_string(gen_col(N, g));
}

std::string NCPoly::to_string(int N, char alphabet) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (Word w : sorted_words()) {
    const RatFunc& c = terms_.at(w);
    if (!first) os << " + ";
    first = false;
    bool unit = c.is_one();
    if (!unit || word::length(w) == 0) os << "(" << c.to_string() << ")";
    for (int p = 0; p < word::length(w); ++p) {
      if (p > 0 || !unit) os << "*";
      os << generator_name(N, word::letter(w, p), alphabet);
    }
  }
  return os.str();
}

nlohmann::json NCPoly::to_json(int N, char alphabet) const {
  nlohmann::json arr = nlohmann::json::array();
  for (Word w : sorted_words()) {
    nlohmann::json gens = nlohmann::json::array();
    for (int g : word::letters(w)) gens.push_back(generator_name(N, g, alphabet));
    arr.push_back({{"word", gens}, {"coeff", terms_.at(w).to_json()}});
  }
  return arr;
}

NCPoly NCPoly::from_json(int N, const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array of terms");
  NCPoly p;
  for (const auto& t : j) {
    std::vector<int> g;
    for (const auto& name : t.at("word")) {
      std::string s = name.get<std::string>();
      if (s.size() != 3) throw ParseError("bad generator name '" + s + "'");
      int i = s[1] - '0', jj = s[2] - '0';
      if (i < 1 || i > N || jj < 1 || jj > N) throw ParseError("generator out of range '" + s + "'");
      g.push_back(gen_index(N, i, jj));
    }
    p.add(word::make(g), RatFunc::from_json(t.at("coeff")));
  }
  return p;
}

}  // namespace qrea
