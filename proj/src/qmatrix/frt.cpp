#include "qrea/qmatrix/frt.hpp"

#include <memory>
#include <mutex>

#include "qrea/braiding/braid.hpp"
#include "qrea/errors.hpp"

namespace qrea {

std::vector<NCPoly> frt_relations(int N) {
  const BraidOperator& R = braid_operator(N);
  auto X = [N](int i, int j, int k, int l) { return word::make({gen_index(N, i, j), gen_index(N, k, l)}); };
  std::vector<NCPoly> rels;
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b)
      for (int e = 1; e <= N; ++e)
        for (int f = 1; f <= N; ++f) {
          NCPoly p;
          // (R X1 X2)[(a,b),(e,f)] = sum R[(a,b),(c,d)] X_ce X_df
          for (int c = 1; c <= N; ++c)
            for (int d = 1; d <= N; ++d) {
              RatFunc r1 = R.entry(a, b, c, d);
              if (!r1.is_zero()) p.add(X(c, e, d, f), r1);
              RatFunc r2 = R.entry(c, d, e, f);
              if (!r2.is_zero()) p.add(X(a, c, b, d), -r2);
            }
          rels.push_back(std::move(p));
        }
  return rels;
}

NCPoly minor_expansion(int N, IndexSet rows, IndexSet cols) {
  if (rows.size() != cols.size()) throw SizeMismatch("minor with unequal row and column counts");
  std::map<std::pair<IndexSet, Word>, RatFunc> state{{{IndexSet{}, word::empty()}, RatFunc(1)}};
  for (int c : cols.elements()) {
    std::map<std::pair<IndexSet, Word>, RatFunc> next;
    for (const auto& [key, coef] : state) {
      const auto& [S, w] = key;
      for (int j = 1; j <= N; ++j) {
        if (S.contains(j) || !rows.contains(j)) continue;
        int above = 0;
        for (int s : S.elements()) above += s > j;
        Word nw = word::concat(w, word::single(gen_index(N, j, c)));
        next[{S | IndexSet{j}, nw}] += coef * minus_q_power(above);
      }
    }
    state = std::move(next);
  }
  NCPoly out;
  for (const auto& [key, coef] : state)
    if (key.first == rows) out.add(key.second, coef);
  return out;
}

QuantumMatrixAlgebra::QuantumMatrixAlgebra(int N)
    : N_(N), rs_(RewriteSystem::from_relations(N * N, frt_relations(N))) {
  std::size_t full = std::size_t{1} << N;
  minors_.resize(full * full);
  for (std::uint32_t r = 0; r < full; ++r)
    for (std::uint32_t c = 0; c < full; ++c) {
      IndexSet R = IndexSet::from_bits(r), C = IndexSet::from_bits(c);
      if (R.size() != C.size()) continue;
      minors_[r * full + c] = rs_.normal_form(minor_expansion(N, R, C));
    }
}

const NCPoly& QuantumMatrixAlgebra::minor(IndexSet rows, IndexSet cols) const {
  if (rows.size() != cols.size()) throw SizeMismatch("minor with unequal row and column counts");
  std::size_t full = std::size_t{1} << N_;
  return minors_.at(rows.bits() * full + cols.bits());
}

const NCPoly& QuantumMatrixAlgebra::minor_product(IndexSet A, IndexSet B, IndexSet C, IndexSet D) const {
  std::uint64_t key = (std::uint64_t{A.bits()} << 48) | (std::uint64_t{B.bits()} << 32) |
                      (std::uint64_t{C.bits()} << 16) | D.bits();
  {
    std::shared_lock lock(prod_mu_);
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
  }
  NCPoly p = mul(minor(A, B), minor(C, D));
  std::unique_lock lock(prod_mu_);
  return products_.emplace(key, std::move(p)).first->second;
}

const QuantumMatrixAlgebra& quantum_matrix_algebra(int N) {
  if (N < 1 || N > 4) throw DegreeOutOfRange("quantum matrix algebra supported for 1 <= N <= 4");
  static std::mutex mu;
  static std::unique_ptr<QuantumMatrixAlgebra> cache[5];
  std::lock_guard lock(mu);
  if (!cache[N]) cache[N] = std::make_unique<QuantumMatrixAlgebra>(N);
  return *cache[N];
}

TensorPoly coproduct(int N, const NCPoly& p) {
  TensorPoly out;
  for (const auto& [w, c] : p.terms()) {
    int d = word::length(w);
    std::vector<int> I = word_rows(N, w), J = word_cols(N, w), K(static_cast<std::size_t>(d), 1);
    for (;;) {
      auto& slot = out[{word_from_indices(N, I, K), word_from_indices(N, K, J)}];
      slot += c;
      int pos = d - 1;
      while (pos >= 0 && K[static_cast<std::size_t>(pos)] == N) K[static_cast<std::size_t>(pos--)] = 1;
      if (pos < 0) break;
      ++K[static_cast<std::size_t>(pos)];
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

RatFunc counit(int N, const NCPoly& p) {
  RatFunc out;
  for (const auto& [w, c] : p.terms()) {
    bool diag = true;
    for (int g : word::letters(w)) diag = diag && gen_row(N, g) == gen_col(N, g);
    if (diag) out += c;
  }
  return out;
}

}  // namespace qrea
