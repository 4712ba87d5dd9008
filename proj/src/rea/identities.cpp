#include "qrea/rea/identities.hpp"

#include "qrea/braiding/braid.hpp"
#include "qrea/errors.hpp"
#include "qrea/rea/star.hpp"

namespace qrea {

const std::vector<std::string>& rea_identity_families() {
  static const std::vector<std::string> f{"gencomm", "laplexp1", "laplexp2", "muirbr", "muirbr2", "revbraid"};
  return f;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw IllFormedInstance(what);
}

void check_subset(IndexSet S, int N) { require(S.empty() || S.max() <= N, "index set outside [N]"); }

IdentitySides gencomm(const IdentityInstance& inst) {
  int N = inst.N;
  IndexSet I = inst.at("I"), J = inst.at("J"), Ip = inst.at("I'"), Jp = inst.at("J'");
  for (IndexSet S : {I, J, Ip, Jp}) check_subset(S, N);
  require(J.size() == I.size() && Jp.size() == Ip.size(), "mismatched minor sizes");
  const auto& star = star_product(N);
  GencommTerms t = gencomm_terms(N, I, J, Ip, Jp);
  IdentitySides s;
  for (const auto& x : t.lhs) s.lhs.add_scaled(star.minors(x.A, x.B, x.C, x.D), x.coeff);
  for (const auto& x : t.rhs) s.rhs.add_scaled(star.minors(x.A, x.B, x.C, x.D), x.coeff);
  return s;
}

IdentitySides laplexp(const IdentityInstance& inst, bool second) {
  int N = inst.N;
  IndexSet I = inst.at("I"), J = inst.at("J"), K = inst.at("K");
  check_subset(I, N);
  check_subset(J, N);
  int k = I.size(), m = K.size();
  require(J.size() == k && (K.empty() || K.max() <= k), "K not in C([k], m)");
  const auto& star = star_product(N);
  const auto& T = wedge_braiding(N, m, k - m);
  const auto& Cm = combinations(N, m);
  const auto& Cr = combinations(N, k - m);
  IdentitySides s;
  s.lhs = star.algebra().minor(I, J);
  for (IndexSet P : combinations(k, m)) {
    RatFunc sign = minus_q_power(P.weight() - K.weight());
    for (IndexSet S : Cm)
      for (IndexSet Tt : Cm)
        for (IndexSet Sp : Cr)
          for (IndexSet Tp : Cr) {
            RatFunc x, y;
            if (!second) {
              // (R^-1)^{S,I_K}_{I^K,T'} R^{J_P,T}_{T',S'} Z_{S,T} Z_{S',J^P}
              auto [IK, IKc] = subselect(I, K);
              auto [JP, JPc] = subselect(J, P);
              x = T.inverse(S, IK, IKc, Tp);
              if (x.is_zero()) continue;
              y = T.value(JP, Tt, Tp, Sp);
              if (y.is_zero()) continue;
              s.rhs.add_scaled(star.minors(S, Tt, Sp, JPc), sign * x * y);
            } else {
              // (R^-1)^{T,J_K}_{J^K,S'} R^{I_P,S}_{S',T'} Z_{I^P,T'} Z_{S,T}
              auto [JK, JKc] = subselect(J, K);
              auto [IP, IPc] = subselect(I, P);
              x = T.inverse(Tt, JK, JKc, Sp);
              if (x.is_zero()) continue;
              y = T.value(IP, S, Sp, Tp);
              if (y.is_zero()) continue;
              s.rhs.add_scaled(star.minors(IPc, Tp, S, Tt), sign * x * y);
            }
          }
  }
  return s;
}

IdentitySides muirbr(const IdentityInstance& inst, bool second) {
  int N = inst.N;
  IndexSet I = inst.at("I"), J = inst.at("J"), F = inst.at("F"), G = inst.at("G"), K = inst.at("K"),
           Kp = inst.at("K'");
  check_subset(I, N);
  check_subset(J, N);
  int k = I.size(), r = k - F.size(), l = K.size();
  require(J.size() == k && G.size() == F.size() && (F.empty() || F.max() <= k) && (G.empty() || G.max() <= k),
          "F, G not in C([k], k - r)");
  require(Kp.size() == l && (K.empty() || K.max() <= r) && (Kp.empty() || Kp.max() <= r), "K, K' not in C([r], l)");
  const auto& star = star_product(N);
  IdentitySides s;
  IndexSet IF = subselect(I, F).first, JG = subselect(J, G).first;
  if (K == Kp) {
    // sum (R^-1)^{S,I}_{I_F,H} R^{J,T}_{H,L} Z_{S,T} Z_{L,J_G}
    const auto& T = wedge_braiding(N, k, k - r);
    for (IndexSet S : combinations(N, k))
      for (IndexSet H : combinations(N, k - r)) {
        RatFunc x = T.inverse(S, I, IF, H);
        if (x.is_zero()) continue;
        for (IndexSet Tt : combinations(N, k))
          for (IndexSet L : combinations(N, k - r)) {
            RatFunc y = T.value(J, Tt, H, L);
            if (!y.is_zero()) s.lhs.add_scaled(star.minors(S, Tt, L, JG), x * y);
          }
      }
  }
  int top = k - r + l, bottom = k - l;
  const auto& T = wedge_braiding(N, top, bottom);
  for (IndexSet P : combinations(r, l)) {
    RatFunc sign = minus_q_power(P.weight() - K.weight());
    // muirbr:  (R^-1)^{A, I_F u (I^F)_K}_{I_F u (I^F)^K', B} R^{J_G u (J^G)_P, C}_{B,D} Z_{A,C} Z_{D, J_G u (J^G)^P}
    // muirbr2: (R^-1)^{A, I_F u (I^F)_P}_{I_F u (I^F)^P, B} R^{J_G u (J^G)_K, C}_{B,D} Z_{A,C} Z_{D, J_G u (J^G)^K'}
    IndexSet iu = extend_minor(I, F, second ? P : K).first;
    IndexSet il = extend_minor(I, F, second ? P : Kp).second;
    IndexSet ju = extend_minor(J, G, second ? K : P).first;
    IndexSet jl = extend_minor(J, G, second ? Kp : P).second;
    for (IndexSet A : combinations(N, top))
      for (IndexSet B : combinations(N, bottom)) {
        RatFunc x = T.inverse(A, iu, il, B);
        if (x.is_zero()) continue;
        for (IndexSet C : combinations(N, top))
          for (IndexSet D : combinations(N, bottom)) {
            RatFunc y = T.value(ju, C, B, D);
            if (!y.is_zero()) s.rhs.add_scaled(star.minors(A, C, D, jl), sign * x * y);
          }
      }
  }
  return s;
}

IdentitySides revbraid(const IdentityInstance& inst) {
  int N = inst.N;
  IndexSet I = inst.at("I"), J = inst.at("J"), Ip = inst.at("I'"), Jp = inst.at("J'");
  for (IndexSet S : {I, J, Ip, Jp}) check_subset(S, N);
  int k = I.size(), l = Ip.size();
  require(J.size() == k && Jp.size() == l, "mismatched minor sizes");
  const auto& star = star_product(N);
  const auto& T = wedge_braiding(N, k, l);
  IdentitySides s;
  s.lhs = star.algebra().minor_product(I, J, Ip, Jp);
  // sum (R^-1)^{A,I}_{I',B} R^{J,C}_{B,D} X_{A,C} * X_{D,J'}
  for (IndexSet A : combinations(N, k))
    for (IndexSet B : combinations(N, l)) {
      RatFunc x = T.inverse(A, I, Ip, B);
      if (x.is_zero()) continue;
      for (IndexSet C : combinations(N, k))
        for (IndexSet D : combinations(N, l)) {
          RatFunc y = T.value(J, C, B, D);
          if (!y.is_zero()) s.rhs.add_scaled(star.minors(A, C, D, Jp), x * y);
        }
    }
  return s;
}

}  // namespace

GencommTerms gencomm_terms(int N, IndexSet I, IndexSet J, IndexSet Ip, IndexSet Jp) {
  int k = I.size(), l = Ip.size();
  const auto& Tlk = wedge_braiding(N, l, k);
  const auto& Tkl = wedge_braiding(N, k, l);
  GencommTerms out;
  for (IndexSet K : combinations(N, k))
    for (IndexSet L : combinations(N, k))
      for (IndexSet Lp : combinations(N, l)) {
        RatFunc a, b;
        for (IndexSet Pp : combinations(N, l)) {
          // sum_P' R^{P'I'}_{JK} R^{IL}_{P'L'}  and  sum_P' R^{P'L'}_{JK} R^{IL}_{P'J'}
          RatFunc x = Tlk.value(Pp, Ip, J, K);
          if (!x.is_zero()) a += x * Tkl.value(I, L, Pp, Lp);
          RatFunc y = Tlk.value(Pp, Lp, J, K);
          if (!y.is_zero()) b += y * Tkl.value(I, L, Pp, Jp);
        }
        if (!a.is_zero()) out.lhs.push_back({K, L, Lp, Jp, a});
        if (!b.is_zero()) out.rhs.push_back({Ip, Lp, K, L, b});
      }
  return out;
}

IdentitySides rea_identity_sides(const IdentityInstance& inst) {
  if (inst.N < 1 || inst.N > 4) throw DegreeOutOfRange("N must lie in 1..4");
  const std::string& f = inst.family;
  if (f == "gencomm") return gencomm(inst);
  if (f == "laplexp1") return laplexp(inst, false);
  if (f == "laplexp2") return laplexp(inst, true);
  if (f == "muirbr") return muirbr(inst, false);
  if (f == "muirbr2") return muirbr(inst, true);
  if (f == "revbraid") return revbraid(inst);
  throw IllFormedInstance("unknown identity family " + f);
}

Certificate verify_rea_identity(const IdentityInstance& inst) {
  return make_certificate(inst, rea_identity_sides(inst), 'X');
}

std::vector<IdentityInstance> rea_identity_sweep(const std::string& family, int N, int max_k, int max_r) {
  std::vector<IdentityInstance> out;
  int top = std::min(N, max_k);
  if (family == "gencomm" || family == "revbraid") {
    for (int k = 1; k <= top; ++k)
      for (int l = 1; l <= top; ++l)
        for (IndexSet I : combinations(N, k))
          for (IndexSet J : combinations(N, k))
            for (IndexSet Ip : combinations(N, l))
              for (IndexSet Jp : combinations(N, l))
                out.push_back({family, N, {{"I", I}, {"J", J}, {"I'", Ip}, {"J'", Jp}}});
  } else if (family == "laplexp1" || family == "laplexp2") {
    for (int k = 1; k <= top; ++k)
      for (IndexSet I : combinations(N, k))
        for (IndexSet J : combinations(N, k))
          for (int m = 0; m <= k; ++m)
            for (IndexSet K : combinations(k, m)) out.push_back({family, N, {{"I", I}, {"J", J}, {"K", K}}});
  } else if (family == "muirbr" || family == "muirbr2") {
    for (int k = 1; k <= top; ++k)
      for (IndexSet I : combinations(N, k))
        for (IndexSet J : combinations(N, k))
          for (int r = 0; r <= std::min(k, max_r); ++r)
            for (IndexSet F : combinations(k, k - r))
              for (IndexSet G : combinations(k, k - r))
                for (int l = 0; l <= r; ++l)
                  for (IndexSet K : combinations(r, l))
                    for (IndexSet Kp : combinations(r, l))
                      out.push_back({family, N, {{"I", I}, {"J", J}, {"F", F}, {"G", G}, {"K", K}, {"K'", Kp}}});
  } else {
    throw IllFormedInstance("unknown identity family " + family);
  }
  return out;
}

}  // namespace qrea
