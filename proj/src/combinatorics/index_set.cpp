#include "qrea/combinatorics/index_set.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "qrea/errors.hpp"

namespace qrea {

namespace {

constexpr int kMaxTableN = 16;

void require_same_size(IndexSet a, IndexSet b) {
  if (a.size() != b.size())
    throw SizeMismatch("index sets " + a.to_string() + " and " + b.to_string() + " differ in size");
}

}  // namespace

IndexSet::IndexSet(std::initializer_list<int> elems) {
  for (int e : elems) {
    if (e < 1 || e > 31) throw PositionOutOfRange("index " + std::to_string(e) + " outside 1..31");
    bits_ |= 1u << (e - 1);
  }
}

IndexSet IndexSet::from_vector(const std::vector<int>& elems) {
  IndexSet s;
  for (int e : elems) {
    if (e < 1 || e > 31) throw PositionOutOfRange("index " + std::to_string(e) + " outside 1..31");
    s.bits_ |= 1u << (e - 1);
  }
  return s;
}

int IndexSet::at(int p) const {
  if (p < 1 || p > size()) throw PositionOutOfRange("position " + std::to_string(p) + " in " + to_string());
  std::uint32_t b = bits_;
  for (int k = 1; k < p; ++k) b &= b - 1;
  return std::countr_zero(b) + 1;
}

int IndexSet::position(int i) const {
  if (!contains(i)) return 0;
  std::uint32_t below = i == 1 ? 0u : bits_ & ((1u << (i - 1)) - 1u);
  return std::popcount(below) + 1;
}

std::vector<int> IndexSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

int IndexSet::weight() const {
  int w = 0;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) w += std::countr_zero(b) + 1;
  return w;
}

std::string IndexSet::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int e : elements()) {
    os << (first ? "" : ",") << e;
    first = false;
  }
  os << "}";
  return os.str();
}

nlohmann::json IndexSet::to_json() const { return elements(); }

IndexSet IndexSet::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("index set must be an integer array");
  std::vector<int> v = j.get<std::vector<int>>();
  if (!std::is_sorted(v.begin(), v.end()) || std::adjacent_find(v.begin(), v.end()) != v.end())
    throw ParseError("index set must be strictly increasing");
  return from_vector(v);
}

std::strong_ordering lex_cmp(IndexSet a, IndexSet b) {
  require_same_size(a, b);
  std::uint32_t x = a.bits(), y = b.bits();
  while (x != 0) {
    int ex = std::countr_zero(x), ey = std::countr_zero(y);
    if (ex != ey) return ex <=> ey;
    x &= x - 1;
    y &= y - 1;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lex_cmp_pair(std::pair<IndexSet, IndexSet> a, std::pair<IndexSet, IndexSet> b) {
  auto c = lex_cmp(a.first, b.first);
  if (c != 0) return c;
  return lex_cmp(a.second, b.second);
}

Dominance dom_cmp(IndexSet a, IndexSet b) {
  require_same_size(a, b);
  bool le = true, ge = true;
  std::uint32_t x = a.bits(), y = b.bits();
  while (x != 0) {
    int ex = std::countr_zero(x), ey = std::countr_zero(y);
    if (ex > ey) le = false;
    if (ex < ey) ge = false;
    x &= x - 1;
    y &= y - 1;
  }
  if (le && ge) return Dominance::Equal;
  if (le) return Dominance::LessEq;
  if (ge) return Dominance::GreaterEq;
  return Dominance::Incomparable;
}

bool dom_less(IndexSet a, IndexSet b) { return dom_cmp(a, b) == Dominance::LessEq; }

bool dom_less_pair(std::pair<IndexSet, IndexSet> a, std::pair<IndexSet, IndexSet> b) {
  if (dom_less(a.first, b.first)) return true;
  return a.first == b.first && dom_less(a.second, b.second);
}

std::pair<IndexSet, IndexSet> subselect(IndexSet I, IndexSet K) {
  if (!K.subset_of(IndexSet::range(I.size())))
    throw PositionOutOfRange("positions " + K.to_string() + " exceed |" + I.to_string() + "|");
  IndexSet sel;
  int p = 1;
  for (std::uint32_t b = I.bits(); b != 0; b &= b - 1, ++p)
    if (K.contains(p)) sel = sel | IndexSet::from_bits(b & -b);
  return {sel, I - sel};
}

IndexSet positions_of(IndexSet I, IndexSet sub) {
  if (!sub.subset_of(I)) throw PositionOutOfRange(sub.to_string() + " is not inside " + I.to_string());
  IndexSet K;
  for (int e : sub.elements()) K = K | IndexSet::from_bits(1u << (I.position(e) - 1));
  return K;
}

const std::vector<IndexSet>& combinations(int n, int k) {
  using Table = std::array<std::array<std::vector<IndexSet>, kMaxTableN + 1>, kMaxTableN + 1>;
  static const Table table = [] {
    Table t;
    for (int n0 = 0; n0 <= kMaxTableN; ++n0) {
      for (std::uint32_t b = 0; b < (1u << n0); ++b) t[n0][std::popcount(b)].push_back(IndexSet::from_bits(b));
      for (auto& v : t[n0])
        std::sort(v.begin(), v.end(), [](IndexSet x, IndexSet y) { return lex_cmp(x, y) < 0; });
    }
    return t;
  }();
  static const std::vector<IndexSet> empty;
  if (n < 0 || n > kMaxTableN) throw DegreeOutOfRange("combinations of " + std::to_string(n));
  if (k < 0 || k > n) return empty;
  return table[n][k];
}

std::vector<IndexSet> combinations_of(IndexSet s, int k) {
  std::vector<IndexSet> out;
  for (IndexSet K : combinations(s.size(), k)) out.push_back(subselect(s, K).first);
  return out;
}

Bijection::Bijection(IndexSet domain, IndexSet codomain, std::vector<int> images)
    : domain_(domain), codomain_(codomain), images_(std::move(images)) {
  if (domain.size() != codomain.size() || static_cast<int>(images_.size()) != domain.size())
    throw SizeMismatch("bijection sizes disagree");
  if (IndexSet::from_vector(images_) != codomain_) throw SizeMismatch("images do not cover the codomain");
}

Bijection Bijection::identity(IndexSet s) { return Bijection(s, s, s.elements()); }

int Bijection::operator()(int i) const {
  int p = domain_.position(i);
  if (p == 0) throw PositionOutOfRange(std::to_string(i) + " not in domain " + domain_.to_string());
  return images_[static_cast<std::size_t>(p - 1)];
}

Bijection Bijection::compose_after(const Bijection& tau) const {
  if (tau.codomain_ != domain_) throw SizeMismatch("composition domains disagree");
  std::vector<int> img;
  img.reserve(tau.images_.size());
  for (int x : tau.images_) img.push_back((*this)(x));
  return Bijection(tau.domain_, codomain_, img);
}

int inversions(const std::vector<int>& seq) {
  int n = 0;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b)
      if (seq[a] > seq[b]) ++n;
  return n;
}

int inversions(const Bijection& sigma) { return inversions(sigma.images()); }

CombLemmaReport check_comb_lemma(IndexSet I, IndexSet J) {
  CombLemmaReport rep{I, J, {}, std::nullopt};
  IndexSet S = I & J, T = I ^ J;
  int need = J.size() - S.size();
  for (IndexSet P : combinations(T.size(), need)) {
    auto [TP, TuP] = subselect(T, P);
    IndexSet a = S | TP, b = S | TuP;
    auto ca = lex_cmp(a, J), cb = lex_cmp(b, I);
    if (ca < 0 || cb < 0) continue;
    rep.admissible.push_back(P);
    if ((ca != 0 || cb != 0) && !rep.counterexample) rep.counterexample = P;
  }
  return rep;
}

}  // namespace qrea
