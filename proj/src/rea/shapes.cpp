#include "qrea/rea/shapes.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qrea/errors.hpp"
#include "qrea/rea/identities.hpp"
#include "qrea/rea/star.hpp"

namespace qrea {

std::string minor_label_string(const MinorLabel& m) {
  std::string s = "Z_{";
  for (int i : m.first.elements()) s += std::to_string(i);
  s += ",";
  for (int j : m.second.elements()) s += std::to_string(j);
  return s + "}";
}

nlohmann::json minor_label_json(const MinorLabel& m) {
  return {{"rows", m.first.to_json()}, {"cols", m.second.to_json()}, {"name", minor_label_string(m)}};
}

namespace {

bool is_sign(const std::string& v) { return v == "1" || v == "-1" || v == "+1"; }
bool is_fixed_symbol(const std::string& v) {
  return is_sign(v) || (v.size() >= 2 && v[0] == 's' &&
                        std::all_of(v.begin() + 1, v.end(), [](char c) { return c >= '0' && c <= '9'; }));
}
bool is_phase_symbol(const std::string& v) {
  if (v.empty() || v[0] != 'y') return false;
  std::string rest = v.substr(1);
  if (rest.size() >= 3 && rest.compare(rest.size() - 3, 3, "bar") == 0) rest.resize(rest.size() - 3);
  return std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; });
}
std::string conj_symbol(const std::string& v) {
  if (!is_phase_symbol(v)) return v;
  if (v.size() >= 3 && v.compare(v.size() - 3, 3, "bar") == 0) return v.substr(0, v.size() - 3);
  return v + "bar";
}

std::vector<std::vector<int>> involutions(int N) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(N));
  auto rec = [&](auto&& self, int i) -> void {
    while (i <= N && t[static_cast<std::size_t>(i - 1)] != 0) ++i;
    if (i > N) {
      out.push_back(t);
      return;
    }
    t[static_cast<std::size_t>(i - 1)] = i;
    self(self, i + 1);
    for (int j = i + 1; j <= N; ++j) {
      if (t[static_cast<std::size_t>(j - 1)] != 0) continue;
      t[static_cast<std::size_t>(i - 1)] = j;
      t[static_cast<std::size_t>(j - 1)] = i;
      self(self, i + 1);
      t[static_cast<std::size_t>(j - 1)] = 0;
    }
    t[static_cast<std::size_t>(i - 1)] = 0;
  };
  rec(rec, 1);
  auto key = [](const std::vector<int>& inv) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < inv.size(); ++i)
      if (inv[i] > static_cast<int>(i) + 1) pairs.emplace_back(static_cast<int>(i) + 1, inv[i]);
    return std::make_pair(pairs.size(), pairs);
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return out;
}

}  // namespace

IndexSet QuantumShape::support() const {
  IndexSet P;
  for (int i = 1; i <= N; ++i)
    if (u[static_cast<std::size_t>(i - 1)] != "0") P = P | IndexSet{i};
  return P;
}

IndexSet QuantumShape::prefix(int k) const {
  IndexSet P = support();
  if (k < 0 || k > P.size()) throw DegreeOutOfRange("k exceeds the rank of the shape");
  return subselect(P, IndexSet::range(k)).first;
}

IndexSet QuantumShape::image(IndexSet s) const {
  IndexSet out;
  for (int i : s.elements()) out = out | IndexSet{tau[static_cast<std::size_t>(i - 1)]};
  return out;
}

MinorLabel QuantumShape::label(int k) const {
  IndexSet Pk = prefix(k);
  return {image(Pk), Pk};
}

bool QuantumShape::self_adjoint() const {
  for (int i = 1; i <= N; ++i)
    if (u[static_cast<std::size_t>(tau[static_cast<std::size_t>(i - 1)] - 1)] !=
        conj_symbol(u[static_cast<std::size_t>(i - 1)]))
      return false;
  return true;
}

void QuantumShape::validate() const {
  if (N < 0 || static_cast<int>(tau.size()) != N || static_cast<int>(u.size()) != N)
    throw IllFormedInstance("tau and u must both have N entries");
  for (int i = 1; i <= N; ++i) {
    int t = tau[static_cast<std::size_t>(i - 1)];
    if (t < 1 || t > N || tau[static_cast<std::size_t>(t - 1)] != i) throw IllFormedInstance("tau is not an involution");
    const std::string& v = u[static_cast<std::size_t>(i - 1)];
    if (v != "0" && !is_fixed_symbol(v) && !is_phase_symbol(v)) throw IllFormedInstance("unknown phase symbol '" + v + "'");
    if (t != i && v == "0") throw IllFormedInstance("u vanishes at a point moved by tau");
    if (t == i && is_phase_symbol(v)) throw IllFormedInstance("phase pair symbol on a fixed point");
    if (t != i && !is_phase_symbol(v)) throw IllFormedInstance("sign symbol on a moved point");
  }
}

nlohmann::json QuantumShape::to_json() const { return {{"tau", tau}, {"u", u}}; }

QuantumShape QuantumShape::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("tau") || !j.contains("u")) throw ParseError("shape JSON needs \"tau\" and \"u\"");
  QuantumShape s;
  try {
    s.tau = j.at("tau").get<std::vector<int>>();
    s.u = j.at("u").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad shape JSON: ") + e.what());
  }
  s.N = static_cast<int>(s.tau.size());
  s.validate();
  return s;
}

std::vector<QuantumShape> enumerate_shapes(int N, bool include_rank0) {
  if (N < 0 || N > 5) throw DegreeOutOfRange("enumerate_shapes needs N <= 5");
  std::vector<QuantumShape> out;
  auto invs = involutions(N);
  for (int M = N; M >= (include_rank0 ? 0 : 1); --M)
    for (const auto& t : invs) {
      IndexSet moved;
      for (int i = 1; i <= N; ++i)
        if (t[static_cast<std::size_t>(i - 1)] != i) moved = moved | IndexSet{i};
      for (IndexSet P : combinations(N, M)) {
        if (!moved.subset_of(P)) continue;
        QuantumShape s{N, t, std::vector<std::string>(static_cast<std::size_t>(N), "0")};
        int fixed = 0, pairs = 0;
        for (int i : P.elements()) {
          int ti = t[static_cast<std::size_t>(i - 1)];
          auto& slot = s.u[static_cast<std::size_t>(i - 1)];
          if (ti == i) {
            slot = "s" + std::to_string(++fixed);
          } else if (ti > i) {
            std::string y = ++pairs == 1 ? "y" : "y" + std::to_string(pairs);
            slot = y;
            s.u[static_cast<std::size_t>(ti - 1)] = y + "bar";
          }
        }
        out.push_back(std::move(s));
      }
    }
  return out;
}

const char* flavor_name(IdealFlavor f) { return f == IdealFlavor::Dominance ? "dominance" : "lex"; }

IdealFlavor parse_flavor(const std::string& s) {
  if (s == "dominance" || s == "dom") return IdealFlavor::Dominance;
  if (s == "lex") return IdealFlavor::Lex;
  throw ParseError("unknown ideal flavor '" + s + "'");
}

bool ShapeIdeal::covers(const MinorLabel& m) const {
  if (m.first.size() > shape.rank()) return true;
  return std::find(generators.begin(), generators.end(), m) != generators.end();
}

nlohmann::json ShapeIdeal::to_json() const {
  nlohmann::json g = nlohmann::json::array();
  for (const auto& m : generators) g.push_back(minor_label_json(m));
  return {{"shape", shape.to_json()}, {"flavor", flavor_name(flavor)}, {"oversize", shape.rank() + 1}, {"generators", g}};
}

ShapeIdeal build_shape_ideal(const QuantumShape& s, IdealFlavor flavor) {
  s.validate();
  if (!s.self_adjoint()) throw IllFormedInstance("shape ideal needs a self-adjoint shape");
  int N = s.N, M = s.rank();
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  ShapeIdeal ideal{s, flavor, {}};
  auto push = [&](IndexSet I, IndexSet J) {
    if (seen.insert({I.bits(), J.bits()}).second) ideal.generators.push_back({I, J});
  };
  if (M + 1 <= N)
    for (IndexSet I : combinations(N, M + 1))
      for (IndexSet J : combinations(N, M + 1)) push(I, J);
  for (int k = 1; k <= M; ++k) {
    auto [rows, cols] = s.label(k);
    for (IndexSet J : combinations(N, k))
      for (IndexSet I : combinations(N, k)) {
        bool below = flavor == IdealFlavor::Dominance ? dom_less_pair({J, I}, {cols, rows})
                                                      : lex_cmp_pair({J, I}, {cols, rows}) < 0;
        if (below) {
          push(I, J);
          push(J, I);
        }
      }
  }
  return ideal;
}

int qcomm_exponent(const MinorLabel& zs, IndexSet I, IndexSet J) {
  const auto& [tP, P] = zs;
  return (I & P).size() + (I & tP).size() - (J & P).size() - (J & tP).size();
}

Certificate qcomm_certificate_for_label(const ShapeIdeal& ideal, const MinorLabel& zs, IndexSet I, IndexSet J) {
  int N = ideal.shape.N;
  Certificate c;
  c.check = "rea-qcomm";
  c.N = N;
  c.instance = {{"shape", ideal.shape.to_json()},
                {"flavor", flavor_name(ideal.flavor)},
                {"Z_S", minor_label_json(zs)},
                {"I", I.to_json()},
                {"J", J.to_json()}};
  int e = qcomm_exponent(zs, I, J);
  c.witness = {{"exponent", e}};
  if (I.size() != J.size() || I.empty() || I.max() > N || J.max() > N) throw IllFormedInstance("I, J must be equal-size subsets of [N]");
  MinorLabel zij{I, J};
  if (ideal.covers(zij) || ideal.covers(zs)) {
    c.witness["route"] = "vacuous";
    return c;
  }
  const auto& [tP, P] = zs;
  GencommTerms terms = gencomm_terms(N, P, tP, I, J);
  using Key = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t>;
  std::map<Key, RatFunc> combo;
  auto key = [](const MinorProductTerm& t) { return Key{t.A.bits(), t.B.bits(), t.C.bits(), t.D.bits()}; };
  for (const auto& t : terms.lhs) combo[key(t)] += t.coeff;
  for (const auto& t : terms.rhs) combo[key(t)] -= t.coeff;
  Key front{tP.bits(), P.bits(), I.bits(), J.bits()}, back{I.bits(), J.bits(), tP.bits(), P.bits()};
  RatFunc cf, cb;
  NCPoly residual;
  const auto& star = star_product(N);
  int dropped = 0, kept = 0;
  for (const auto& [k, v] : combo) {
    if (v.is_zero()) continue;
    auto [a, b, cc, d] = k;
    MinorLabel m1{IndexSet::from_bits(a), IndexSet::from_bits(b)}, m2{IndexSet::from_bits(cc), IndexSet::from_bits(d)};
    if (k == front) {
      cf = v;
    } else if (k == back) {
      cb = v;
    } else if (ideal.covers(m1) || ideal.covers(m2)) {
      ++dropped;
    } else {
      ++kept;
      residual.add_scaled(star.minors(m1.first, m1.second, m2.first, m2.second), v);
    }
  }
  c.witness["ideal_summands"] = dropped;
  c.witness["front"] = cf.to_json();
  c.witness["back"] = cb.to_json();
  if (front == back) {
    c.witness["route"] = "self";
    if (kept > 0 && !residual.is_zero()) {
      c.status = Status::Inconclusive;
      c.witness["residual"] = residual.to_string(N, 'Z');
    }
    return c;
  }
  if (kept > 0) {
    c.witness["residual_summands"] = kept;
    if (!residual.is_zero()) {
      c.status = Status::Inconclusive;
      c.witness["residual"] = residual.to_string(N, 'Z');
      return c;
    }
    c.witness["route"] = "pattern+cancellation";
  } else {
    c.witness["route"] = "pattern";
  }
  if (cf.is_zero()) {
    c.status = cb.is_zero() ? Status::Inconclusive : Status::Fail;
    c.witness["reason"] = "designated product Z_S Z_IJ has zero coefficient";
    return c;
  }
  RatFunc ratio = -cb / cf;
  c.witness["ratio"] = ratio.to_json();
  if (!(ratio == RatFunc::q_power(e))) {
    c.status = Status::Fail;
    c.witness["reason"] = "surviving coefficient differs from the stated q-power";
  }
  return c;
}

Certificate shape_qcomm_certificate(const QuantumShape& s, int k, IndexSet I, IndexSet J, IdealFlavor flavor) {
  ShapeIdeal ideal = build_shape_ideal(s, flavor);
  if (k < 1 || k > s.rank()) throw DegreeOutOfRange("k must lie in 1..rank");
  Certificate c = qcomm_certificate_for_label(ideal, s.label(k), I, J);
  c.instance["k"] = k;
  return c;
}

std::vector<Certificate> shape_qcomm_sweep(const QuantumShape& s, int max_size, IdealFlavor flavor) {
  ShapeIdeal ideal = build_shape_ideal(s, flavor);
  std::vector<Certificate> out;
  for (int k = 1; k <= s.rank(); ++k)
    for (int l = 1; l <= std::min(max_size, s.N); ++l)
      for (IndexSet I : combinations(s.N, l))
        for (IndexSet J : combinations(s.N, l)) {
          Certificate c = qcomm_certificate_for_label(ideal, s.label(k), I, J);
          c.instance["k"] = k;
          out.push_back(std::move(c));
        }
  return out;
}

}  // namespace qrea
