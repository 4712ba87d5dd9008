#include "qrea/rea/star.hpp"

#include <memory>
#include <mutex>

#include "qrea/combinatorics/sequences.hpp"
#include "qrea/errors.hpp"

namespace qrea {

StarProduct::StarProduct(int N) : N_(N), alg_(&quantum_matrix_algebra(N)), bc_(&bicharacter(N)) {}

NCPoly StarProduct::words(Word f, Word g) const {
  {
    std::shared_lock lock(mu_);
    auto it = word_cache_.find({f, g});
    if (it != word_cache_.end()) return it->second;
  }
  int e = word::length(g);
  std::vector<int> I = word_rows(N_, f), J = word_cols(N_, f);
  std::vector<int> K = word_rows(N_, g), L = word_cols(N_, g);
  Content cI = content_of(N_, I), cJ = content_of(N_, J), cK = content_of(N_, K);
  NCPoly free;
  for (const auto& S : all_sequences(N_, e)) {
    Content cS = content_of(N_, S);
    // r'(w(Q,J), w(K,S)) needs c(Q) = c(J) + c(S) - c(K).
    Content cQ = cJ;
    for (std::size_t i = 0; i < cQ.size(); ++i) cQ[i] += cS[i] - cK[i];
    std::vector<std::pair<std::vector<int>, RatFunc>> right;
    Word gS = word_from_indices(N_, K, S);
    for (const auto& Q : sequences_with_content(cQ)) {
      RatFunc v = bc_->r_prime(word_from_indices(N_, Q, J), gS);
      if (!v.is_zero()) right.push_back({Q, v});
    }
    if (right.empty()) continue;
    for (const auto& T : all_sequences(N_, e)) {
      Content cP = cI;
      Content cT = content_of(N_, T);
      for (std::size_t i = 0; i < cP.size(); ++i) cP[i] += cS[i] - cT[i];
      Word gST = word_from_indices(N_, S, T);
      Word g3 = word_from_indices(N_, T, L);
      for (const auto& P : sequences_with_content(cP)) {
        RatFunc x = bc_->r(word_from_indices(N_, I, P), gST);
        if (x.is_zero()) continue;
        for (const auto& [Q, y] : right) free.add(word::concat(word_from_indices(N_, P, Q), g3), x * y);
      }
    }
  }
  NCPoly out = alg_->nf(free);
  std::unique_lock lock(mu_);
  word_cache_.emplace(std::make_pair(f, g), out);
  return out;
}

NCPoly StarProduct::operator()(const NCPoly& f, const NCPoly& g) const {
  NCPoly out;
  for (const auto& [wf, cf] : f.terms())
    for (const auto& [wg, cg] : g.terms()) {
      if (word::length(wf) == 0 || word::length(wg) == 0) {
        out.add(word::concat(wf, wg), cf * cg);
        continue;
      }
      out.add_scaled(words(wf, wg), cf * cg);
    }
  return out;
}

const NCPoly& StarProduct::minors(IndexSet A, IndexSet B, IndexSet C, IndexSet D) const {
  if (A.size() != B.size() || C.size() != D.size()) throw SizeMismatch("minor with unequal row and column counts");
  std::uint64_t key = (std::uint64_t{A.bits()} << 48) | (std::uint64_t{B.bits()} << 32) |
                      (std::uint64_t{C.bits()} << 16) | D.bits();
  {
    std::shared_lock lock(mu_);
    auto it = minor_cache_.find(key);
    if (it != minor_cache_.end()) return it->second;
  }
  using K = Bicharacter::Kind;
  const auto& Ck = combinations(N_, A.size());
  const auto& Cl = combinations(N_, C.size());
  NCPoly out;
  // sum r(X_{A,A1}, X_{C1,C2}) X_{A1,A2} X_{C2,D} r'(X_{A2,B}, X_{C,C1})
  for (IndexSet A2 : Ck)
    for (IndexSet C1 : Cl) {
      RatFunc y = bc_->minor(K::RPrime, A2, B, C, C1);
      if (y.is_zero()) continue;
      for (IndexSet A1 : Ck)
        for (IndexSet C2 : Cl) {
          RatFunc x = bc_->minor(K::R, A, A1, C1, C2);
          if (x.is_zero()) continue;
          out.add_scaled(alg_->minor_product(A1, A2, C2, D), x * y);
        }
    }
  std::unique_lock lock(mu_);
  return minor_cache_.emplace(key, std::move(out)).first->second;
}

const StarProduct& star_product(int N) {
  if (N < 1 || N > 4) throw DegreeOutOfRange("star product supported for 1 <= N <= 4");
  static std::mutex mu;
  static std::unique_ptr<StarProduct> cache[5];
  std::lock_guard lock(mu);
  if (!cache[N]) cache[N] = std::make_unique<StarProduct>(N);
  return *cache[N];
}

}  // namespace qrea
