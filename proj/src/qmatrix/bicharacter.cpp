#include "qrea/qmatrix/bicharacter.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "qrea/braiding/braid.hpp"
#include "qrea/coeff/matrix.hpp"
#include "qrea/combinatorics/sequences.hpp"
#include "qrea/errors.hpp"

namespace qrea {

namespace {

std::string key_string(const Content& c) {
  std::string s;
  for (int x : c) s += std::to_string(x) + ",";
  return s;
}

/// Inverts a matrix given by entry(row, col) block by block; rows and columns
/// are grouped by a key outside of which the entries vanish. Returns Y with
/// Y[col][row] keyed as (col index, row index).
template <class Entry>
std::map<std::pair<std::size_t, std::size_t>, RatFunc> block_inverse(const std::vector<std::string>& row_keys,
                                                                     const std::vector<std::string>& col_keys,
                                                                     Entry entry) {
  std::map<std::string, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> blocks;
  for (std::size_t i = 0; i < row_keys.size(); ++i) blocks[row_keys[i]].first.push_back(i);
  for (std::size_t j = 0; j < col_keys.size(); ++j) blocks[col_keys[j]].second.push_back(j);
  std::map<std::pair<std::size_t, std::size_t>, RatFunc> out;
  for (const auto& [key, rc] : blocks) {
    const auto& [rows, cols] = rc;
    if (rows.size() != cols.size()) throw SingularConvolutionSystem("non-square content block " + key);
    RatMatrix m(rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = 0; b < cols.size(); ++b) m(a, b) = entry(rows[a], cols[b]);
    auto inv = m.inverse();
    if (!inv) throw SingularConvolutionSystem("singular content block " + key);
    for (std::size_t b = 0; b < cols.size(); ++b)
      for (std::size_t a = 0; a < rows.size(); ++a)
        if (!(*inv)(b, a).is_zero()) out[{cols[b], rows[a]}] = (*inv)(b, a);
  }
  return out;
}

Content diff(Content a, const Content& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Content sum(Content a, const Content& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

std::uint64_t pack4(IndexSet A, IndexSet B, IndexSet C, IndexSet D) {
  return (std::uint64_t{A.bits()} << 48) | (std::uint64_t{B.bits()} << 32) | (std::uint64_t{C.bits()} << 16) |
         D.bits();
}

}  // namespace

Bicharacter::Bicharacter(int N) : N_(N), alg_(&quantum_matrix_algebra(N)) {
  int n = N * N;
  gen_inv_.assign(static_cast<std::size_t>(n * n), RatFunc());
  gen_prime_.assign(static_cast<std::size_t>(n * n), RatFunc());
  // Row and column labels are index pairs (x, y) encoded as (x-1) N + (y-1).
  std::vector<std::pair<int, int>> labels;
  for (int x = 1; x <= N; ++x)
    for (int y = 1; y <= N; ++y) labels.push_back({x, y});
  auto unit = [N](int x) {
    Content c(static_cast<std::size_t>(N + 1), 0);
    ++c[static_cast<std::size_t>(x)];
    return c;
  };
  std::vector<std::string> diff_keys, sum_keys;
  for (auto [x, y] : labels) {
    diff_keys.push_back(key_string(diff(unit(x), unit(y))));
    sum_keys.push_back(key_string(sum(unit(x), unit(y))));
  }
  // r_prime: A[(i,l),(p,s)] = r(X_ip, X_sl); r_prime(X_pj, X_ks) = A^-1[(p,s),(j,k)].
  auto yp = block_inverse(diff_keys, diff_keys, [&](std::size_t row, std::size_t col) {
    auto [i, l] = labels[row];
    auto [p, s] = labels[col];
    return generator_value(Kind::R, gen_index(N, i, p), gen_index(N, s, l));
  });
  for (const auto& [pc, v] : yp) {
    auto [p, s] = labels[pc.first];
    auto [j, k] = labels[pc.second];
    gen_prime_[static_cast<std::size_t>(gen_index(N, p, j) * n + gen_index(N, k, s))] = v;
  }
  // r_inv: A[(i,k),(p,s)] = r(X_ip, X_ks); r_inv(X_pj, X_sl) = A^-1[(p,s),(j,l)].
  auto yi = block_inverse(sum_keys, sum_keys, [&](std::size_t row, std::size_t col) {
    auto [i, k] = labels[row];
    auto [p, s] = labels[col];
    return generator_value(Kind::R, gen_index(N, i, p), gen_index(N, k, s));
  });
  for (const auto& [pc, v] : yi) {
    auto [p, s] = labels[pc.first];
    auto [j, l] = labels[pc.second];
    gen_inv_[static_cast<std::size_t>(gen_index(N, p, j) * n + gen_index(N, s, l))] = v;
  }
  for (auto& s : minor_solved_) s.assign(static_cast<std::size_t>((N + 1) * (N + 1)), false);
}

RatFunc Bicharacter::generator_value(Kind kind, int g1, int g2) const {
  int n = N_ * N_;
  switch (kind) {
    case Kind::R: {
      // r(X_ij, X_kl) is the coefficient of e_k (x) e_i in R(e_j (x) e_l).
      int i = gen_row(N_, g1), j = gen_col(N_, g1), k = gen_row(N_, g2), l = gen_col(N_, g2);
      return braid_operator(N_).entry(k, i, j, l);
    }
    case Kind::RInv:
      return gen_inv_[static_cast<std::size_t>(g1 * n + g2)];
    case Kind::RPrime:
      return gen_prime_[static_cast<std::size_t>(g1 * n + g2)];
  }
  return RatFunc();
}

RatFunc Bicharacter::eval(Kind kind, Word a, Word c) const {
  int la = word::length(a), lc = word::length(c);
  if (la == 0) return counit(N_, NCPoly::monomial(c));
  if (lc == 0) return counit(N_, NCPoly::monomial(a));
  if (la == 1 && lc == 1) return generator_value(kind, word::letter(a, 0), word::letter(c, 0));

  Memo& m = memo_[static_cast<std::size_t>(kind)];
  {
    std::shared_lock lock(m.mu);
    auto it = m.map.find({a, c});
    if (it != m.map.end()) return it->second;
  }
  std::vector<int> I = word_rows(N_, a), P = word_cols(N_, a);
  std::vector<int> S = word_rows(N_, c), L = word_cols(N_, c);
  Content cS = content_of(N_, S), cL = content_of(N_, L);
  RatFunc out;
  if (la >= 2) {
    int i1 = I[0], p1 = P[0];
    Word head = word::sub(a, 0, 1), tail = word::sub(a, 1, la - 1);
    Content cK;
    if (kind == Kind::R) {
      // r(a1 a', w(S,L)) = sum_K r(a1, w(S,K)) r(a', w(K,L)); weights force c(K) = c(S) + i1 - p1.
      cK = cS;
      ++cK[static_cast<std::size_t>(i1)];
      --cK[static_cast<std::size_t>(p1)];
    } else {
      // f(a1 a', w(S,L)) = sum_K f(a', w(S,K)) f(a1, w(K,L)); weights force c(K) = c(L) + p1 - i1.
      cK = cL;
      ++cK[static_cast<std::size_t>(p1)];
      --cK[static_cast<std::size_t>(i1)];
    }
    for (const auto& K : sequences_with_content(cK)) {
      Word first = word_from_indices(N_, S, K), second = word_from_indices(N_, K, L);
      RatFunc x = kind == Kind::R ? eval(kind, head, first) : eval(kind, tail, first);
      if (x.is_zero()) continue;
      RatFunc y = kind == Kind::R ? eval(kind, tail, second) : eval(kind, head, second);
      if (!y.is_zero()) out += x * y;
    }
  } else {
    int i = I[0], j = P[0];
    Word c1 = word::sub(c, 0, 1), rest = word::sub(c, 1, lc - 1);
    for (int p = 1; p <= N_; ++p) {
      if (kind == Kind::R) {
        // r(X_ij, c1 c') = sum_p r(X_pj, c1) r(X_ip, c')
        RatFunc x = eval(kind, word::single(gen_index(N_, p, j)), c1);
        if (x.is_zero()) continue;
        out += x * eval(kind, word::single(gen_index(N_, i, p)), rest);
      } else {
        // f(X_ij, c1 c') = sum_p f(X_ip, c1) f(X_pj, c')
        RatFunc x = eval(kind, word::single(gen_index(N_, i, p)), c1);
        if (x.is_zero()) continue;
        out += x * eval(kind, word::single(gen_index(N_, p, j)), rest);
      }
    }
  }
  std::unique_lock lock(m.mu);
  m.map.emplace(std::make_pair(a, c), out);
  return out;
}

RatFunc Bicharacter::eval(Kind kind, const NCPoly& a, const NCPoly& c) const {
  RatFunc out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wc, cc] : c.terms()) {
      RatFunc v = eval(kind, wa, wc);
      if (!v.is_zero()) out += ca * cc * v;
    }
  return out;
}

RatFunc Bicharacter::minor_by_words(Kind kind, IndexSet A, IndexSet B, IndexSet C, IndexSet D) const {
  return eval(kind, minor_expansion(N_, A, B), minor_expansion(N_, C, D));
}

void Bicharacter::solve_minor_block(Kind kind, int k, int l) const {
  const auto& Ck = combinations(N_, k);
  const auto& Cl = combinations(N_, l);
  std::vector<std::pair<IndexSet, IndexSet>> labels;
  for (IndexSet x : Ck)
    for (IndexSet y : Cl) labels.push_back({x, y});
  auto content = [this](IndexSet s) {
    Content c(static_cast<std::size_t>(N_ + 1), 0);
    for (int x : s.elements()) ++c[static_cast<std::size_t>(x)];
    return c;
  };
  std::vector<std::string> keys;
  for (auto [x, y] : labels)
    keys.push_back(key_string(kind == Kind::RPrime ? diff(content(x), content(y)) : sum(content(x), content(y))));
  auto y = block_inverse(keys, keys, [&](std::size_t row, std::size_t col) {
    auto [I, L] = labels[row];
    auto [P, S] = labels[col];
    // r_prime: A[(I,L),(P,S)] = r(X_IP, X_SL); r_inv: A[(I,K),(P,S)] = r(X_IP, X_KS).
    return kind == Kind::RPrime ? minor(Kind::R, I, P, S, L) : minor(Kind::R, I, P, L, S);
  });
  std::unordered_map<std::uint64_t, RatFunc> vals;
  for (IndexSet P : Ck)
    for (IndexSet J : Ck)
      for (IndexSet K : Cl)
        for (IndexSet S : Cl) {
          // r_prime(X_PJ, X_KS) = Y[(P,S),(J,K)]; r_inv(X_PJ, X_SL) reuses the same loop with (K,S) -> (S,L).
          std::size_t col = 0, row = 0;
          for (std::size_t t = 0; t < labels.size(); ++t) {
            if (labels[t] == std::make_pair(P, S)) col = t;
            if (labels[t] == std::make_pair(J, K)) row = t;
          }
          auto it = y.find({col, row});
          RatFunc v = it == y.end() ? RatFunc() : it->second;
          if (kind == Kind::RPrime)
            vals[pack4(P, J, K, S)] = v;
          else
            vals[pack4(P, J, S, K)] = v;
        }
  std::unique_lock lock(table_mu_);
  auto& dst = minor_values_[static_cast<std::size_t>(kind)];
  for (auto& [key, v] : vals) dst[key] = v;
  minor_solved_[static_cast<std::size_t>(kind)][static_cast<std::size_t>(k * (N_ + 1) + l)] = true;
}

RatFunc Bicharacter::minor(Kind kind, IndexSet A, IndexSet B, IndexSet C, IndexSet D) const {
  if (A.size() != B.size() || C.size() != D.size()) throw SizeMismatch("minor with unequal row and column counts");
  std::uint64_t key = pack4(A, B, C, D);
  auto& vals = minor_values_[static_cast<std::size_t>(kind)];
  {
    std::shared_lock lock(table_mu_);
    auto it = vals.find(key);
    if (it != vals.end()) return it->second;
    if (kind != Kind::R &&
        minor_solved_[static_cast<std::size_t>(kind)][static_cast<std::size_t>(A.size() * (N_ + 1) + C.size())])
      return RatFunc();
  }
  if (kind == Kind::R) {
    RatFunc v = minor_by_words(Kind::R, A, B, C, D);
    std::unique_lock lock(table_mu_);
    vals[key] = v;
    return v;
  }
  solve_minor_block(kind, A.size(), C.size());
  std::shared_lock lock(table_mu_);
  auto it = vals.find(key);
  return it == vals.end() ? RatFunc() : it->second;
}

RatFunc Bicharacter::solve_on_words(Kind kind, Word a, Word c) const {
  if (kind == Kind::R) return r(a, c);
  std::size_t ki = static_cast<std::size_t>(kind);
  {
    std::shared_lock lock(table_mu_);
    auto it = solved_values_[ki].find({a, c});
    if (it != solved_values_[ki].end()) return it->second;
  }
  int d = word::length(a), e = word::length(c);
  std::vector<int> P = word_rows(N_, a), J = word_cols(N_, a);
  std::vector<int> K = word_rows(N_, c), S = word_cols(N_, c);
  // r_prime(w(P,J), w(K,S)) = Y[(P,S),(J,K)], block key c(P) - c(S).
  // r_inv(w(P,J), w(S,L)) = Y[(P,S),(J,L)] with c = w(S,L), block key c(P) + c(S).
  Content key = kind == Kind::RPrime ? diff(content_of(N_, P), content_of(N_, S))
                                     : sum(content_of(N_, P), content_of(N_, K));
  std::string bkey = std::to_string(d) + "/" + std::to_string(e) + "/" + key_string(key);
  bool solved;
  {
    std::shared_lock lock(table_mu_);
    solved = solved_blocks_[ki].count(bkey) > 0;
  }
  if (!solved) {
    // Pair labels (x, y) with x of length d and y of length e inside the block.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> labels;
    for (const auto& x : all_sequences(N_, d))
      for (const auto& y : all_sequences(N_, e)) {
        Content kxy = kind == Kind::RPrime ? diff(content_of(N_, x), content_of(N_, y))
                                           : sum(content_of(N_, x), content_of(N_, y));
        if (kxy == key) labels.push_back({x, y});
      }
    std::vector<std::string> keys(labels.size(), "b");
    auto y = block_inverse(keys, keys, [&](std::size_t row, std::size_t col) {
      const auto& [I, L] = labels[row];
      const auto& [Pc, Sc] = labels[col];
      // r_prime: A[(I,L),(P,S)] = r(w(I,P), w(S,L)); r_inv: A[(I,K),(P,S)] = r(w(I,P), w(K,S)).
      return kind == Kind::RPrime ? r(word_from_indices(N_, I, Pc), word_from_indices(N_, Sc, L))
                                  : r(word_from_indices(N_, I, Pc), word_from_indices(N_, L, Sc));
    });
    std::unique_lock lock(table_mu_);
    for (std::size_t col = 0; col < labels.size(); ++col)
      for (std::size_t row = 0; row < labels.size(); ++row) {
        const auto& [Pc, Sc] = labels[col];
        const auto& [Jr, Kr] = labels[row];
        auto it = y.find({col, row});
        RatFunc v = it == y.end() ? RatFunc() : it->second;
        if (kind == Kind::RPrime)
          solved_values_[ki][{word_from_indices(N_, Pc, Jr), word_from_indices(N_, Kr, Sc)}] = v;
        else
          solved_values_[ki][{word_from_indices(N_, Pc, Jr), word_from_indices(N_, Sc, Kr)}] = v;
      }
    solved_blocks_[ki][bkey] = true;
  }
  std::shared_lock lock(table_mu_);
  auto it = solved_values_[ki].find({a, c});
  return it == solved_values_[ki].end() ? RatFunc() : it->second;
}

const Bicharacter& bicharacter(int N) {
  if (N < 1 || N > 4) throw DegreeOutOfRange("bicharacter supported for 1 <= N <= 4");
  static std::mutex mu;
  static std::unique_ptr<Bicharacter> cache[5];
  std::lock_guard lock(mu);
  if (!cache[N]) cache[N] = std::make_unique<Bicharacter>(N);
  return *cache[N];
}

ConvolutionReport check_convolution_inverse(const Bicharacter& b, Bicharacter::Kind kind, int d, int e) {
  int N = b.N();
  ConvolutionReport rep;
  auto A = all_sequences(N, d), B = all_sequences(N, e);
  for (const auto& I : A)
    for (const auto& J : A)
      for (const auto& K : B)
        for (const auto& L : B) {
          ++rep.pairs_checked;
          RatFunc s;
          for (const auto& P : A)
            for (const auto& S : B) {
              RatFunc x, y;
              if (kind == Bicharacter::Kind::RPrime) {
                // sum r(w(I,P), w(S,L)) r'(w(P,J), w(K,S))
                x = b.r(word_from_indices(N, I, P), word_from_indices(N, S, L));
                if (x.is_zero()) continue;
                y = b.r_prime(word_from_indices(N, P, J), word_from_indices(N, K, S));
              } else {
                // sum r(w(I,P), w(K,S)) r^-1(w(P,J), w(S,L))
                x = b.r(word_from_indices(N, I, P), word_from_indices(N, K, S));
                if (x.is_zero()) continue;
                y = b.r_inv(word_from_indices(N, P, J), word_from_indices(N, S, L));
              }
              if (!y.is_zero()) s += x * y;
            }
          RatFunc expect = (I == J && K == L) ? RatFunc(1) : RatFunc();
          if (!(s == expect)) ++rep.failures;
        }
  return rep;
}

ConvolutionReport check_minor_convolution_inverse(const Bicharacter& b, Bicharacter::Kind kind, int k, int l) {
  int N = b.N();
  ConvolutionReport rep;
  const auto& Ck = combinations(N, k);
  const auto& Cl = combinations(N, l);
  using K = Bicharacter::Kind;
  for (IndexSet I : Ck)
    for (IndexSet J : Ck)
      for (IndexSet Kk : Cl)
        for (IndexSet L : Cl) {
          ++rep.pairs_checked;
          RatFunc s;
          for (IndexSet P : Ck)
            for (IndexSet S : Cl) {
              if (kind == K::RPrime)
                s += b.minor(K::R, I, P, S, L) * b.minor(K::RPrime, P, J, Kk, S);
              else
                s += b.minor(K::R, I, P, Kk, S) * b.minor(K::RInv, P, J, S, L);
            }
          RatFunc expect = (I == J && Kk == L) ? RatFunc(1) : RatFunc();
          if (!(s == expect)) ++rep.failures;
        }
  return rep;
}

}  // namespace qrea
