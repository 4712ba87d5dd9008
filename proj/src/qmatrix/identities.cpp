#include "qrea/qmatrix/identities.hpp"

#include "qrea/braiding/braid.hpp"
#include "qrea/errors.hpp"
#include "qrea/qmatrix/frt.hpp"

namespace qrea {

IndexSet IdentityInstance::at(const std::string& name) const {
  auto it = sets.find(name);
  if (it == sets.end()) throw IllFormedInstance(family + " instance lacks set " + name);
  return it->second;
}

nlohmann::json IdentityInstance::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : sets) j[k] = v.to_json();
  return j;
}

IdentityInstance IdentityInstance::from_json(const std::string& family, int N, const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  IdentityInstance inst{family, N, {}};
  for (const auto& [k, v] : j.items()) inst.sets[k] = IndexSet::from_json(v);
  return inst;
}

const std::vector<std::string>& matrix_identity_families() {
  static const std::vector<std::string> f{"braidcomm1", "braidcomm2", "laplace-col", "laplace-row", "muir", "muir2"};
  return f;
}

std::pair<IndexSet, IndexSet> extend_minor(IndexSet X, IndexSet F, IndexSet K) {
  auto [XF, Xrest] = subselect(X, F);
  auto [in, out] = subselect(Xrest, K);
  return {XF | in, XF | out};
}

Certificate make_certificate(const IdentityInstance& inst, const IdentitySides& sides, char alphabet) {
  Certificate c;
  c.check = inst.family;
  c.N = inst.N;
  c.instance = inst.to_json();
  c.status = sides.lhs == sides.rhs ? Status::Pass : Status::Fail;
  if (!c.passed())
    c.witness = {{"lhs", sides.lhs.to_string(inst.N, alphabet)},
                 {"rhs", sides.rhs.to_string(inst.N, alphabet)},
                 {"difference", (sides.lhs - sides.rhs).to_string(inst.N, alphabet)}};
  return c;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw IllFormedInstance(what);
}

void check_subset(IndexSet S, int N, const std::string& name) {
  require(S.empty() || S.max() <= N, name + " is not a subset of [N]");
}

IdentitySides laplace(const IdentityInstance& inst, bool row) {
  int N = inst.N;
  IndexSet I = inst.at("I"), J = inst.at("J"), K = inst.at("K"), Kp = inst.at("K'");
  int k = I.size(), l = K.size();
  check_subset(I, N, "I");
  check_subset(J, N, "J");
  require(J.size() == k, "|I| != |J|");
  require(Kp.size() == l && (K.empty() || K.max() <= k) && (Kp.empty() || Kp.max() <= k), "K, K' not in C([k], l)");
  const auto& A = quantum_matrix_algebra(N);
  IdentitySides s;
  if (K == Kp) s.lhs = A.minor(I, J);
  for (IndexSet P : combinations(k, l)) {
    RatFunc c = minus_q_power(P.weight() - K.weight());
    if (row) {
      auto [IK, IKc] = subselect(I, K);
      auto [IKp, IKpc] = subselect(I, Kp);
      auto [JP, JPc] = subselect(J, P);
      s.rhs.add_scaled(A.minor_product(IK, JP, IKpc, JPc), c);
    } else {
      auto [IP, IPc] = subselect(I, P);
      auto [JK, JKc] = subselect(J, K);
      auto [JKp, JKpc] = subselect(J, Kp);
      s.rhs.add_scaled(A.minor_product(IP, JK, IPc, JKpc), c);
    }
  }
  return s;
}

IdentitySides muir(const IdentityInstance& inst, bool second) {
  int N = inst.N;
  IndexSet I = inst.at("I"), J = inst.at("J"), F = inst.at("F"), G = inst.at("G"), K = inst.at("K"),
           Kp = inst.at("K'");
  int k = I.size();
  check_subset(I, N, "I");
  check_subset(J, N, "J");
  require(J.size() == k, "|I| != |J|");
  int r = k - F.size(), l = K.size();
  require(G.size() == F.size() && (F.empty() || F.max() <= k) && (G.empty() || G.max() <= k),
          "F, G not in C([k], k - r)");
  require(Kp.size() == l && (K.empty() || K.max() <= r) && (Kp.empty() || Kp.max() <= r), "K, K' not in C([r], l)");
  const auto& A = quantum_matrix_algebra(N);
  IdentitySides s;
  if (K == Kp) s.lhs = A.minor_product(I, J, subselect(I, F).first, subselect(J, G).first);
  for (IndexSet P : combinations(r, l)) {
    RatFunc c = minus_q_power(P.weight() - K.weight());
    if (!second) {
      // X_{I_F u (I^F)_K, J_G u (J^G)_P} X_{I_F u (I^F)^K', J_G u (J^G)^P}
      IndexSet a = extend_minor(I, F, K).first, b = extend_minor(J, G, P).first;
      IndexSet cc = extend_minor(I, F, Kp).second, d = extend_minor(J, G, P).second;
      s.rhs.add_scaled(A.minor_product(a, b, cc, d), c);
    } else {
      // X_{I_F u (I^F)_P, J_G u (J^G)_K} X_{I_F u (I^F)^P, J_G u (J^G)^K'}
      IndexSet a = extend_minor(I, F, P).first, b = extend_minor(J, G, K).first;
      IndexSet cc = extend_minor(I, F, P).second, d = extend_minor(J, G, Kp).second;
      s.rhs.add_scaled(A.minor_product(a, b, cc, d), c);
    }
  }
  return s;
}

IdentitySides braidcomm(const IdentityInstance& inst, bool second) {
  int N = inst.N;
  IndexSet I = inst.at("I"), J = inst.at("J"), Ip = inst.at("I'"), Jp = inst.at("J'");
  int k = I.size(), l = Ip.size();
  for (auto [S, n] : {std::pair{I, "I"}, {J, "J"}, {Ip, "I'"}, {Jp, "J'"}}) check_subset(S, N, n);
  require(J.size() == k && Jp.size() == l, "mismatched minor sizes");
  const auto& A = quantum_matrix_algebra(N);
  const auto& Tkl = wedge_braiding(N, k, l);
  const auto& Tlk = wedge_braiding(N, l, k);
  IdentitySides s;
  s.lhs = A.minor_product(Ip, Jp, I, J);
  const auto& Ck = combinations(N, k);
  const auto& Cl = combinations(N, l);
  for (IndexSet a : Ck)
    for (IndexSet b : Cl) {
      // braidcomm1: R^{A,I}_{I',B}; braidcomm2: (R^-1)^{B,I'}_{I,A}
      RatFunc x = second ? Tlk.inverse(b, Ip, I, a) : Tkl.value(a, I, Ip, b);
      if (x.is_zero()) continue;
      for (IndexSet c : Ck)
        for (IndexSet d : Cl) {
          // braidcomm1: (R^-1)^{J,C}_{D,J'}; braidcomm2: R^{J',D}_{C,J}
          RatFunc y = second ? Tlk.value(Jp, d, c, J) : Tkl.inverse(J, c, d, Jp);
          if (y.is_zero()) continue;
          s.rhs.add_scaled(A.minor_product(a, c, b, d), x * y);
        }
    }
  return s;
}

}  // namespace

IdentitySides matrix_identity_sides(const IdentityInstance& inst) {
  if (inst.N < 1 || inst.N > 4) throw DegreeOutOfRange("N must lie in 1..4");
  const std::string& f = inst.family;
  if (f == "laplace-row") return laplace(inst, true);
  if (f == "laplace-col") return laplace(inst, false);
  if (f == "muir") return muir(inst, false);
  if (f == "muir2") return muir(inst, true);
  if (f == "braidcomm1") return braidcomm(inst, false);
  if (f == "braidcomm2") return braidcomm(inst, true);
  throw IllFormedInstance("unknown identity family " + f);
}

Certificate verify_matrix_identity(const IdentityInstance& inst) {
  return make_certificate(inst, matrix_identity_sides(inst), 'X');
}

std::vector<IdentityInstance> matrix_identity_sweep(const std::string& family, int N, int max_k) {
  std::vector<IdentityInstance> out;
  int top = std::min(N, max_k);
  if (family == "laplace-row" || family == "laplace-col") {
    for (int k = 1; k <= top; ++k)
      for (IndexSet I : combinations(N, k))
        for (IndexSet J : combinations(N, k))
          for (int l = 0; l <= k; ++l)
            for (IndexSet K : combinations(k, l))
              for (IndexSet Kp : combinations(k, l))
                out.push_back({family, N, {{"I", I}, {"J", J}, {"K", K}, {"K'", Kp}}});
  } else if (family == "muir" || family == "muir2") {
    for (int k = 1; k <= top; ++k)
      for (IndexSet I : combinations(N, k))
        for (IndexSet J : combinations(N, k))
          for (int r = 0; r <= k; ++r)
            for (IndexSet F : combinations(k, k - r))
              for (IndexSet G : combinations(k, k - r))
                for (int l = 0; l <= r; ++l)
                  for (IndexSet K : combinations(r, l))
                    for (IndexSet Kp : combinations(r, l))
                      out.push_back({family, N, {{"I", I}, {"J", J}, {"F", F}, {"G", G}, {"K", K}, {"K'", Kp}}});
  } else if (family == "braidcomm1" || family == "braidcomm2") {
    for (int k = 1; k <= top; ++k)
      for (int l = 1; l <= top; ++l)
        for (IndexSet I : combinations(N, k))
          for (IndexSet J : combinations(N, k))
            for (IndexSet Ip : combinations(N, l))
              for (IndexSet Jp : combinations(N, l))
                out.push_back({family, N, {{"I", I}, {"J", J}, {"I'", Ip}, {"J'", Jp}}});
  } else {
    throw IllFormedInstance("unknown identity family " + family);
  }
  return out;
}

}  // namespace qrea
