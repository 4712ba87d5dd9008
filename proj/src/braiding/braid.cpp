#include "qrea/braiding/braid.hpp"

#include <algorithm>
#include <array>
#include <mutex>

#include "qrea/errors.hpp"

namespace qrea {

namespace {

RatFunc qp(int e) { return RatFunc::q_power(e); }

// Inverse of a 2x2 block [[a, b], [c, d]] over RatFunc.
std::array<RatFunc, 4> invert2(const RatFunc& a, const RatFunc& b, const RatFunc& c, const RatFunc& d) {
  RatFunc det = a * d - b * c;
  RatFunc inv = det.inverse();
  return {d * inv, -b * inv, -c * inv, a * inv};
}

}  // namespace

BraidOperator::BraidOperator(int N) : N_(N) {
  if (N < 1 || N > 15) throw DegreeOutOfRange("braid operator dimension " + std::to_string(N));
  cols_.resize(static_cast<std::size_t>(N * N));
  inv_cols_.resize(static_cast<std::size_t>(N * N));
  const RatFunc c = qp(-1) - qp(1);
  for (int k = 1; k <= N; ++k)
    for (int l = 1; l <= N; ++l) {
      auto& col = cols_[idx(k, l)];
      col.push_back({l, k, k == l ? qp(-1) : RatFunc(1)});
      if (l < k) col.push_back({k, l, c});
    }
  // The operator preserves span{e_k (x) e_l, e_l (x) e_k}; invert each block.
  for (int k = 1; k <= N; ++k) {
    inv_cols_[idx(k, k)].push_back({k, k, entry(k, k, k, k).inverse()});
    for (int l = k + 1; l <= N; ++l) {
      // basis u = e_k (x) e_l, v = e_l (x) e_k
      RatFunc uu = entry(k, l, k, l), uv = entry(k, l, l, k);
      RatFunc vu = entry(l, k, k, l), vv = entry(l, k, l, k);
      auto m = invert2(uu, uv, vu, vv);
      auto push = [](std::vector<Entry>& col, int a, int b, const RatFunc& x) {
        if (!x.is_zero()) col.push_back({a, b, x});
      };
      push(inv_cols_[idx(k, l)], k, l, m[0]);
      push(inv_cols_[idx(k, l)], l, k, m[2]);
      push(inv_cols_[idx(l, k)], k, l, m[1]);
      push(inv_cols_[idx(l, k)], l, k, m[3]);
    }
  }
}

RatFunc BraidOperator::entry(int a, int b, int c, int d) const {
  for (const auto& e : column(c, d))
    if (e.a == a && e.b == b) return e.value;
  return RatFunc();
}

RatFunc BraidOperator::inverse_entry(int a, int b, int c, int d) const {
  for (const auto& e : inverse_column(c, d))
    if (e.a == a && e.b == b) return e.value;
  return RatFunc();
}

Tensor BraidOperator::apply(const Tensor& t, int pos, bool inverse) const {
  if (pos < 0 || pos + 1 >= t.degree) throw PositionOutOfRange("braid position " + std::to_string(pos));
  Tensor out;
  out.degree = t.degree;
  for (const auto& [key, coef] : t.coeffs) {
    int a = seq::get(key, pos), b = seq::get(key, pos + 1);
    const auto& col = inverse ? inverse_column(a, b) : column(a, b);
    for (const auto& e : col) {
      std::uint64_t k2 = seq::set(seq::set(key, pos, e.a), pos + 1, e.b);
      out.add(k2, coef * e.value);
    }
  }
  return out;
}

const BraidOperator& braid_operator(int N) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<BraidOperator>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[N];
  if (!slot) slot = std::make_unique<BraidOperator>(N);
  return *slot;
}

BraidOperator build_braid(int N) { return BraidOperator(N); }

namespace {

template <class F>
bool for_all_basis(int N, int degree, F&& f) {
  std::vector<int> idx(static_cast<std::size_t>(degree), 1);
  while (true) {
    if (!f(Tensor::basis(idx))) return false;
    int p = 0;
    while (p < degree && idx[static_cast<std::size_t>(p)] == N) idx[static_cast<std::size_t>(p++)] = 1;
    if (p == degree) return true;
    ++idx[static_cast<std::size_t>(p)];
  }
}

}  // namespace

bool braid_relation_check(int N) {
  const BraidOperator& R = braid_operator(N);
  return for_all_basis(N, 3, [&](const Tensor& v) {
    Tensor lhs = R.apply(R.apply(R.apply(v, 0), 1), 0);
    Tensor rhs = R.apply(R.apply(R.apply(v, 1), 0), 1);
    return lhs == rhs;
  });
}

bool hecke_check(int N) {
  const BraidOperator& R = braid_operator(N);
  return for_all_basis(N, 2, [&](const Tensor& v) {
    Tensor w = R.apply(v, 0);
    Tensor x = v;
    x.scale(qp(1));
    w += x;  // (R + q) v
    Tensor y = R.apply(w, 0);
    Tensor z = w;
    z.scale(qp(-1));
    y -= z;  // (R - q^-1)(R + q) v
    return y.is_zero();
  });
}

bool braid_symmetry_check(int N) {
  const BraidOperator& R = braid_operator(N);
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b)
      for (int c = 1; c <= N; ++c)
        for (int d = 1; d <= N; ++d)
          if (!(R.entry(a, b, c, d) == R.entry(c, d, a, b))) return false;
  return true;
}

bool braid_inverse_check(int N) {
  const BraidOperator& R = braid_operator(N);
  return for_all_basis(N, 2, [&](const Tensor& v) {
    return R.apply(R.apply(v, 0), 0, true) == v && R.apply(R.apply(v, 0, true), 0) == v;
  });
}

void WedgeVector::add(IndexSet I, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = coeffs.try_emplace(I, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

void WedgePair::add(IndexSet I, IndexSet J, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = coeffs.try_emplace({I, J}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

WedgeVector wedge_reduce(const std::vector<int>& word) {
  WedgeVector v;
  v.degree = static_cast<int>(word.size());
  IndexSet s;
  for (int w : word) {
    if (s.contains(w)) return v;
    s = s | IndexSet{w};
  }
  v.add(s, minus_q_power(inversions(word)));
  return v;
}

Tensor antisymmetrizer(IndexSet I) {
  Tensor t;
  t.degree = I.size();
  std::vector<int> perm = I.elements();
  do {
    t.add(seq::pack(perm), minus_q_power(inversions(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return t;
}

Tensor wedge_embed(const WedgeVector& v) {
  Tensor t;
  t.degree = v.degree;
  RatFunc norm = RatFunc(q2_factorial(v.degree)).inverse();
  for (const auto& [I, c] : v.coeffs) {
    Tensor a = antisymmetrizer(I);
    a.scale(c * norm);
    t += a;
  }
  return t;
}

WedgeVector wedge_project(const Tensor& t) {
  WedgeVector v;
  v.degree = t.degree;
  for (const auto& [key, c] : t.coeffs) {
    WedgeVector r = wedge_reduce(seq::unpack(key, t.degree));
    for (const auto& [I, s] : r.coeffs) v.add(I, s * c);
  }
  return v;
}

WedgePair wedge_project_pair(const Tensor& t, int k) {
  WedgePair v;
  v.k = k;
  v.l = t.degree - k;
  for (const auto& [key, c] : t.coeffs) {
    auto w = seq::unpack(key, t.degree);
    WedgeVector a = wedge_reduce(std::vector<int>(w.begin(), w.begin() + k));
    if (a.coeffs.empty()) continue;
    WedgeVector b = wedge_reduce(std::vector<int>(w.begin() + k, w.end()));
    if (b.coeffs.empty()) continue;
    const auto& [I, sa] = *a.coeffs.begin();
    const auto& [J, sb] = *b.coeffs.begin();
    v.add(I, J, sa * sb * c);
  }
  return v;
}

Tensor wedge_embed_pair(const WedgePair& v) {
  Tensor t;
  t.degree = v.k + v.l;
  RatFunc norm = RatFunc(q2_factorial(v.k) * q2_factorial(v.l)).inverse();
  for (const auto& [IJ, c] : v.coeffs) {
    Tensor a = Tensor::product(antisymmetrizer(IJ.first), antisymmetrizer(IJ.second));
    a.scale(c * norm);
    t += a;
  }
  return t;
}

namespace {

// Positions of the elementary steps making up the (k, l) block braid.
std::vector<int> block_steps(int k, int l) {
  std::vector<int> steps;
  for (int f = k; f >= 1; --f)
    for (int p = f - 1; p < f - 1 + l; ++p) steps.push_back(p);
  return steps;
}

}  // namespace

Tensor block_braid(const BraidOperator& R, const Tensor& t, int k, int l) {
  if (t.degree != k + l) throw SizeMismatch("block braid degree");
  Tensor cur = t;
  for (int p : block_steps(k, l)) cur = R.apply(cur, p);
  return cur;
}

Tensor block_braid_inverse(const BraidOperator& R, const Tensor& t, int k, int l) {
  if (t.degree != k + l) throw SizeMismatch("block braid degree");
  auto steps = block_steps(k, l);
  Tensor cur = t;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) cur = R.apply(cur, *it, true);
  return cur;
}

WedgeBraidTable::WedgeBraidTable(int N, int k, int l) : N_(N), k_(k), l_(l) {
  if (k < 0 || l < 0 || k > N || l > N)
    throw DegreeOutOfRange("wedge table degrees (" + std::to_string(k) + "," + std::to_string(l) + ") for N=" +
                           std::to_string(N));
  const BraidOperator& R = braid_operator(N);
  RatFunc norm = RatFunc(q2_factorial(k) * q2_factorial(l)).inverse();
  for (IndexSet I : combinations(N, k))
    for (IndexSet Jp : combinations(N, l)) {
      Tensor v = Tensor::product(antisymmetrizer(I), antisymmetrizer(Jp));
      WedgePair out = wedge_project_pair(block_braid(R, v, k, l), l);
      for (const auto& [key, c] : out.coeffs) fwd_[{I, key.second, key.first, Jp}] = c * norm;
    }
  for (IndexSet Jp : combinations(N, l))
    for (IndexSet I : combinations(N, k)) {
      Tensor v = Tensor::product(antisymmetrizer(Jp), antisymmetrizer(I));
      WedgePair out = wedge_project_pair(block_braid_inverse(R, v, k, l), k);
      for (const auto& [key, c] : out.coeffs) inv_[{I, key.first, key.second, Jp}] = c * norm;
    }
}

RatFunc WedgeBraidTable::value(IndexSet I, IndexSet J, IndexSet Ip, IndexSet Jp) const {
  auto it = fwd_.find({I, J, Ip, Jp});
  return it == fwd_.end() ? RatFunc() : it->second;
}

RatFunc WedgeBraidTable::inverse(IndexSet I, IndexSet J, IndexSet Ip, IndexSet Jp) const {
  auto it = inv_.find({I, J, Ip, Jp});
  return it == inv_.end() ? RatFunc() : it->second;
}

nlohmann::json WedgeBraidTable::to_json(bool inverse_table) const {
  // Emit in lexicographic key order so dumps are stable.
  std::vector<std::pair<Key, RatFunc>> rows(inverse_table ? inv_.begin() : fwd_.begin(),
                                            inverse_table ? inv_.end() : fwd_.end());
  auto lex_key = [](const Key& a, const Key& b) {
    auto ca = lex_cmp(std::get<0>(a), std::get<0>(b));
    if (ca != 0) return ca < 0;
    ca = lex_cmp(std::get<1>(a), std::get<1>(b));
    if (ca != 0) return ca < 0;
    ca = lex_cmp(std::get<2>(a), std::get<2>(b));
    if (ca != 0) return ca < 0;
    return lex_cmp(std::get<3>(a), std::get<3>(b)) < 0;
  };
  std::sort(rows.begin(), rows.end(), [&](const auto& x, const auto& y) { return lex_key(x.first, y.first); });
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, v] : rows)
    entries.push_back({{"I", std::get<0>(key).to_json()},
                       {"J", std::get<1>(key).to_json()},
                       {"I'", std::get<2>(key).to_json()},
                       {"J'", std::get<3>(key).to_json()},
                       {"value", v.to_json()}});
  return {{"N", N_}, {"k", k_}, {"l", l_}, {"inverse", inverse_table}, {"entries", entries}};
}

const WedgeBraidTable& wedge_braiding(int N, int k, int l) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<WedgeBraidTable>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({N, k, l});
    if (it != cache.end()) return *it->second;
  }
  // Build outside the lock; a racing duplicate build is discarded.
  auto table = std::make_unique<WedgeBraidTable>(N, k, l);
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{N, k, l}];
  if (!slot) slot = std::move(table);
  return *slot;
}

bool support_condition_holds(IndexSet I, IndexSet J, IndexSet Ip, IndexSet Jp) {
  Dominance a = dom_cmp(J, I), b = dom_cmp(Jp, Ip);
  bool dom = (a == Dominance::LessEq || a == Dominance::Equal) && (b == Dominance::LessEq || b == Dominance::Equal);
  return dom && (J - I) == (Jp - Ip) && (I - J) == (Ip - Jp);
}

TableReport check_wedge_table(const WedgeBraidTable& t) {
  TableReport rep;
  auto fail = [&](bool& flag, const std::string& what) {
    if (flag && rep.first_failure.empty()) rep.first_failure = what;
    flag = false;
  };
  auto key_str = [](const WedgeBraidTable::Key& k) {
    return std::get<0>(k).to_string() + std::get<1>(k).to_string() + std::get<2>(k).to_string() +
           std::get<3>(k).to_string();
  };
  for (const auto& [key, v] : t.entries())
    if (!support_condition_holds(std::get<0>(key), std::get<1>(key), std::get<2>(key), std::get<3>(key)))
      fail(rep.support_ok, "support " + key_str(key));
  for (const auto& [key, v] : t.inverse_entries())
    if (!support_condition_holds(std::get<0>(key), std::get<1>(key), std::get<2>(key), std::get<3>(key)))
      fail(rep.inverse_support_ok, "inverse support " + key_str(key));
  const auto& ks = combinations(t.N(), t.k());
  const auto& ls = combinations(t.N(), t.l());
  for (IndexSet I : ks)
    for (IndexSet Ip : ls) {
      int s = (I & Ip).size();
      if (!(t.value(I, I, Ip, Ip) == RatFunc::q_power(-s))) fail(rep.diagonal_ok, "diagonal " + I.to_string() + Ip.to_string());
      if (!(t.inverse(I, I, Ip, Ip) == RatFunc::q_power(s)))
        fail(rep.inverse_diagonal_ok, "inverse diagonal " + I.to_string() + Ip.to_string());
    }
  // inverse after forward, on every basis vector e_A (x) e_B
  for (IndexSet A : ks)
    for (IndexSet B : ls) {
      std::map<std::pair<IndexSet, IndexSet>, RatFunc> acc;
      for (IndexSet J : ks)
        for (IndexSet Ip : ls) {
          RatFunc a = t.value(A, J, Ip, B);
          if (a.is_zero()) continue;
          for (IndexSet J2 : ks)
            for (IndexSet I2 : ls) {
              RatFunc b = t.inverse(J, J2, I2, Ip);
              if (!b.is_zero()) acc[{J2, I2}] += a * b;
            }
        }
      for (const auto& [key, v] : acc) {
        bool diag = key.first == A && key.second == B;
        if (!(v == RatFunc(diag ? 1 : 0))) fail(rep.composition_ok, "composition " + A.to_string() + B.to_string());
      }
      if (acc.find({A, B}) == acc.end()) fail(rep.composition_ok, "composition " + A.to_string() + B.to_string());
    }
  return rep;
}

RMatrixLemmaReport rmatrix_lemma_check(int N, IndexSet I, IndexSet Ip) {
  RMatrixLemmaReport rep;
  rep.I = I;
  rep.Ip = Ip;
  IndexSet S = I & Ip, T = I ^ Ip;
  int r = T.size(), M = I.size(), Mp = Ip.size();
  rep.l = (I - Ip).size();
  rep.lp = (Ip - I).size();
  int l = rep.l, lp = rep.lp;
  rep.xi.k = M;
  rep.xi.l = Mp;
  for (IndexSet P : combinations(r, l)) {
    auto [TP, TuP] = subselect(T, P);
    rep.xi.add(S | TP, S | TuP, minus_q_power(P.weight()));
  }
  rep.xi_prime.k = Mp;
  rep.xi_prime.l = M;
  for (IndexSet P : combinations(r, lp)) {
    auto [TP, TuP] = subselect(T, P);
    rep.xi_prime.add(S | TP, S | TuP, minus_q_power(P.weight()));
  }
  // Inverse braiding from the M-th (x) M'-th wedge power back to M' (x) M.
  const WedgeBraidTable& tab = wedge_braiding(N, Mp, M);
  rep.image.k = Mp;
  rep.image.l = M;
  for (const auto& [AB, c] : rep.xi.coeffs)
    for (IndexSet J : combinations(N, Mp))
      for (IndexSet Iq : combinations(N, M)) {
        RatFunc v = tab.inverse(AB.second, J, Iq, AB.first);
        if (!v.is_zero()) rep.image.add(J, Iq, c * v);
      }
  int e = l * (l + 1) / 2 - lp * (lp + 1) / 2 - l * lp;
  rep.scalar = RatFunc::q_power(S.size()) * minus_q_power(e);
  WedgePair expected = rep.xi_prime;
  for (auto& [k, v] : expected.coeffs) v *= rep.scalar;
  rep.pass = expected == rep.image;
  return rep;
}

nlohmann::json wedge_vector_json(const WedgePair& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [IJ, c] : v.coeffs)
    arr.push_back({{"left", IJ.first.to_json()}, {"right", IJ.second.to_json()}, {"coeff", c.to_json()}});
  return arr;
}

}  // namespace qrea

namespace qrea {

RatFunc rhat(int N, IndexSet I, IndexSet J, IndexSet Ip, IndexSet Jp) {
  return wedge_braiding(N, I.size(), Ip.size()).value(I, J, Ip, Jp);
}

RatFunc rhat_inv(int N, IndexSet I, IndexSet J, IndexSet Ip, IndexSet Jp) {
  return wedge_braiding(N, I.size(), Ip.size()).inverse(I, J, Ip, Jp);
}

}  // namespace qrea
