#include "qrea/cli/checks.hpp"

#include <algorithm>
#include <random>

#include "qrea/braiding/braid.hpp"
#include "qrea/classical/poisson.hpp"
#include "qrea/classical/shape.hpp"
#include "qrea/coeff/ratfunc.hpp"
#include "qrea/combinatorics/index_set.hpp"
#include "qrea/errors.hpp"
#include "qrea/qmatrix/bicharacter.hpp"
#include "qrea/qmatrix/frt.hpp"
#include "qrea/qmatrix/identities.hpp"
#include "qrea/rea/identities.hpp"
#include "qrea/rea/reflection.hpp"
#include "qrea/rea/semiclassical.hpp"
#include "qrea/rea/shapes.hpp"
#include "qrea/rea/star.hpp"

namespace qrea {

std::uint64_t sample_seed(std::uint64_t master, const std::string& check, std::size_t i) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : check) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  std::uint64_t x = master ^ (h + 0x9E3779B97F4A7C15ULL * (i + 1));
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

const std::vector<ReferenceShape>& reference_shapes_n3() {
  static const std::vector<ReferenceShape> table = {
      {{1, 2, 3}, {"s1", "s2", "s3"}, {"Z_{1,1}", "Z_{12,12}", "Z_{123,123}"}},
      {{2, 1, 3}, {"y", "ybar", "s1"}, {"Z_{2,1}", "Z_{12,12}", "Z_{123,123}"}},
      {{3, 2, 1}, {"y", "s1", "ybar"}, {"Z_{3,1}", "Z_{13,13}", "Z_{123,123}"}},
      {{1, 3, 2}, {"s1", "y", "ybar"}, {"Z_{3,2}", "Z_{23,23}", "Z_{123,123}"}},
      {{1, 2, 3}, {"s1", "s2", "0"}, {"Z_{1,1}", "Z_{12,12}"}},
      {{1, 2, 3}, {"s1", "0", "s2"}, {"Z_{1,1}", "Z_{13,13}"}},
      {{1, 2, 3}, {"0", "s1", "s2"}, {"Z_{2,2}", "Z_{23,23}"}},
      {{2, 1, 3}, {"y", "ybar", "0"}, {"Z_{2,1}", "Z_{12,12}"}},
      {{3, 2, 1}, {"y", "0", "ybar"}, {"Z_{3,1}", "Z_{13,13}"}},
      {{1, 3, 2}, {"0", "y", "ybar"}, {"Z_{3,2}", "Z_{23,23}"}},
      {{1, 2, 3}, {"s1", "0", "0"}, {"Z_{1,1}"}},
      {{1, 2, 3}, {"0", "s1", "0"}, {"Z_{2,2}"}},
      {{1, 2, 3}, {"0", "0", "s1"}, {"Z_{3,3}"}},
  };
  return table;
}

namespace {

using Rng = std::mt19937_64;
using json = nlohmann::json;

Certificate make(const std::string& check, int N, json instance, bool ok, json witness = nullptr) {
  Certificate c;
  c.check = check;
  c.N = N;
  c.instance = std::move(instance);
  c.status = ok ? Status::Pass : Status::Fail;
  if (!ok) c.witness = std::move(witness);
  return c;
}

int samples_of(const CheckContext& ctx, int fallback) { return ctx.samples > 0 ? ctx.samples : fallback; }

// Sample i gets its own generator, so the parallel and serial executors agree.
template <class F>
std::vector<Certificate> sampled(const CheckContext& ctx, const std::string& name, int count, F f) {
  return sweep<Certificate>(
      static_cast<std::size_t>(count),
      [&](std::size_t i) {
        Rng rng(sample_seed(ctx.seed, name, i));
        Certificate c = f(rng, static_cast<int>(i));
        c.instance["sample"] = static_cast<int>(i);
        return c;
      },
      ctx.exec);
}

std::vector<Certificate> tag(std::vector<Certificate> certs, const std::string& name) {
  for (auto& c : certs) {
    c.instance["family"] = c.check;
    c.check = name;
  }
  return certs;
}

std::vector<Certificate> identity_sweeps(const CheckContext& ctx, const std::string& name,
                                         const std::vector<std::string>& families, bool rea, int max_k, int max_r = 2) {
  std::vector<Certificate> out;
  for (const auto& fam : families) {
    std::vector<Certificate> certs;
    if (rea) {
      certs = verify_all(rea_identity_sweep(fam, ctx.N, max_k, max_r), verify_rea_identity, ctx.exec);
    } else {
      certs = verify_all(matrix_identity_sweep(fam, ctx.N, max_k), verify_matrix_identity, ctx.exec);
    }
    for (auto& c : tag(std::move(certs), name)) out.push_back(std::move(c));
  }
  return out;
}

// coeff

LaurentPoly random_poly(Rng& rng, int span = 3) {
  std::uniform_int_distribution<int> coef(-4, 4), exp(-span, span), count(0, 4);
  std::map<int, Rational> t;
  int n = count(rng);
  for (int i = 0; i < n; ++i) t[exp(rng)] += Rational(coef(rng), 1 + std::abs(coef(rng)));
  for (auto& [e, c] : t) c.canonicalize();
  return LaurentPoly::from_terms(t);
}

RatFunc random_ratfunc(Rng& rng) {
  LaurentPoly d;
  while (d.is_zero()) d = random_poly(rng, 2);
  return RatFunc::normalize(random_poly(rng), d);
}

std::vector<Certificate> coeff_axioms(const CheckContext& ctx) {
  const std::string name = "coeff-ring-axioms";
  return sampled(ctx, name, samples_of(ctx, 1000), [&](Rng& rng, int) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    bool ring = a + b == b + a && a * b == b * a && (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) &&
                a * (b + c) == a * b + a * c && (a - a).is_zero();
    RatFunc x = random_ratfunc(rng), y = random_ratfunc(rng), z = random_ratfunc(rng);
    bool field = x + y == y + x && x * y == y * x && (x + y) + z == x + (y + z) && (x * y) * z == x * (y * z) &&
                 x * (y + z) == x * y + x * z && (x.is_zero() || x * x.inverse() == RatFunc(1));
    return make(name, ctx.N, json::object(), ring && field,
                {{"laurent", {a.to_string(), b.to_string(), c.to_string()}},
                 {"ratfunc", {x.to_string(), y.to_string(), z.to_string()}}});
  });
}

std::vector<Certificate> coeff_normalize(const CheckContext& ctx) {
  const std::string name = "coeff-normalize";
  return sampled(ctx, name, samples_of(ctx, 300), [&](Rng& rng, int) {
    RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
    LaurentPoly s;
    while (s.is_zero()) s = random_poly(rng, 2);
    bool idem = RatFunc::normalize(a.numerator(), a.denominator()) == a;
    bool common = RatFunc::normalize(a.numerator() * s, a.denominator() * s) == a;
    bool cross = (a == b) == (a.numerator() * b.denominator() == b.numerator() * a.denominator());
    return make(name, ctx.N, json::object(), idem && common && cross, {{"a", a.to_string()}, {"b", b.to_string()}});
  });
}

std::vector<Certificate> coeff_eval(const CheckContext& ctx) {
  const std::string name = "coeff-eval";
  return sampled(ctx, name, samples_of(ctx, 50), [&](Rng& rng, int) {
    LaurentPoly p = random_poly(rng);
    std::uniform_int_distribution<int> num(1, 19), den(1, 10);
    json bad = nullptr;
    for (int s = 0; s < 20 && bad.is_null(); ++s) {
      Rational q0(num(rng), den(rng));
      q0.canonicalize();
      Rational direct(0);
      for (const auto& [e, c] : p.terms()) {
        Rational pw(1);
        for (int k = 0; k < std::abs(e); ++k) pw *= q0;
        direct += e >= 0 ? Rational(c * pw) : Rational(c / pw);
      }
      if (p.evaluate(q0) != direct) bad = {{"p", p.to_string()}, {"q0", to_string(q0)}};
    }
    return make(name, ctx.N, json::object(), bad.is_null(), bad);
  });
}

// combinatorics

std::vector<Certificate> comb_dominance(const CheckContext& ctx) {
  std::vector<Certificate> out;
  for (int k = 0; k <= 6; ++k) {
    json bad = nullptr;
    for (IndexSet a : combinations(6, k))
      for (IndexSet b : combinations(6, k)) {
        Dominance d = dom_cmp(a, b);
        if ((d == Dominance::LessEq || d == Dominance::Equal) && lex_cmp(a, b) > 0 && bad.is_null())
          bad = {{"I", a.to_json()}, {"J", b.to_json()}};
      }
    out.push_back(make("comb-dominance-lex", ctx.N, {{"n", 6}, {"k", k}}, bad.is_null(), bad));
  }
  return out;
}

std::vector<Certificate> comb_weights(const CheckContext& ctx) {
  std::vector<Certificate> out;
  for (std::uint32_t b = 0; b < 64; ++b) {
    IndexSet I = IndexSet::from_bits(b);
    json bad = nullptr;
    for (std::uint32_t kb = 0; kb < (1u << I.size()) && bad.is_null(); ++kb) {
      auto [lo, hi] = subselect(I, IndexSet::from_bits(kb));
      if (lo.weight() + hi.weight() != I.weight()) bad = {{"K", IndexSet::from_bits(kb).to_json()}};
    }
    out.push_back(make("comb-weight-split", ctx.N, {{"I", I.to_json()}}, bad.is_null(), bad));
  }
  return out;
}

std::vector<Certificate> comb_partition(const CheckContext& ctx) {
  return sweep<Certificate>(
      128,
      [&](std::size_t a) {
        IndexSet I = IndexSet::from_bits(static_cast<std::uint32_t>(a));
        json bad = nullptr;
        for (std::uint32_t b = 0; b < 128 && bad.is_null(); ++b) {
          auto rep = check_comb_lemma(I, IndexSet::from_bits(b));
          if (!rep.ok()) bad = {{"J", IndexSet::from_bits(b).to_json()}, {"P", rep.counterexample->to_json()}};
        }
        return make("comb-partition-lemma", ctx.N, {{"n", 7}, {"I", I.to_json()}}, bad.is_null(), bad);
      },
      ctx.exec);
}

std::vector<Certificate> comb_parity(const CheckContext& ctx) {
  const std::string name = "comb-inversion-parity";
  return sampled(ctx, name, samples_of(ctx, 500), [&](Rng& rng, int) {
    IndexSet s = IndexSet::range(6);
    std::vector<int> a = s.elements(), b = s.elements();
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    Bijection sigma(s, s, a), tau(s, s, b);
    int d = inversions(sigma.compose_after(tau)) - inversions(sigma) - inversions(tau);
    return make(name, ctx.N, json::object(), d % 2 == 0, {{"sigma", a}, {"tau", b}});
  });
}

// braiding

std::vector<Certificate> braid_relation(const CheckContext& ctx) {
  return {make("braid-relation", ctx.N, json::object(), braid_relation_check(ctx.N))};
}

std::vector<Certificate> braid_hecke(const CheckContext& ctx) {
  return {make("braid-hecke", ctx.N, json::object(), hecke_check(ctx.N))};
}

std::vector<Certificate> wedge_tables(const CheckContext& ctx, bool composition) {
  const std::string name = composition ? "wedge-composition" : "wedge-tables";
  std::vector<Certificate> out;
  for (int k = 0; k <= std::min(ctx.N, 3); ++k)
    for (int l = 0; l <= std::min(ctx.N, 3); ++l) {
      TableReport rep = check_wedge_table(wedge_braiding(ctx.N, k, l));
      bool ok = composition ? rep.composition_ok
                            : rep.support_ok && rep.diagonal_ok && rep.inverse_diagonal_ok && rep.inverse_support_ok;
      out.push_back(make(name, ctx.N, {{"k", k}, {"l", l}}, ok, {{"reason", rep.first_failure}}));
    }
  return out;
}

std::vector<Certificate> wedge_equivariance(const CheckContext& ctx) {
  const std::string name = "wedge-embed-equivariance";
  const BraidOperator& R = braid_operator(ctx.N);
  RatFunc mq = -RatFunc::q_power(1);
  std::vector<Certificate> out;
  for (int k = 1; k <= std::min(ctx.N, 3); ++k)
    for (int l = 0; l <= std::min(ctx.N, 3); ++l) {
      json bad = nullptr;
      // Each elementary braid inside a factor acts on the image of the embedding by -q.
      for (IndexSet I : combinations(ctx.N, k))
        for (IndexSet J : combinations(ctx.N, l)) {
          WedgePair v;
          v.k = k;
          v.l = l;
          v.add(I, J, 1);
          Tensor e = wedge_embed_pair(v);
          for (int p = 0; p + 1 < k + l && bad.is_null(); ++p) {
            if (p == k - 1) continue;
            Tensor expect = e;
            expect.scale(mq);
            if (!(R.apply(e, p) == expect)) bad = {{"I", I.to_json()}, {"J", J.to_json()}, {"position", p}};
          }
          if (l > 0 && bad.is_null()) {
            Tensor out_t = block_braid(R, e, k, l);
            if (!(wedge_embed_pair(wedge_project_pair(out_t, l)) == out_t))
              bad = {{"I", I.to_json()}, {"J", J.to_json()}, {"reason", "block braid leaves the image"}};
          }
        }
      out.push_back(make(name, ctx.N, {{"k", k}, {"l", l}}, bad.is_null(), bad));
    }
  return out;
}

std::vector<Certificate> wedge_rhat_acts(const CheckContext& ctx) {
  const std::string name = "wedge-rhat-acts";
  const BraidOperator& R = braid_operator(ctx.N);
  std::vector<Certificate> out;
  for (std::uint32_t tb = 1; tb < (1u << ctx.N); ++tb) {
    IndexSet T = IndexSet::from_bits(tb);
    int r = T.size();
    for (int l = 0; l <= r; ++l) {
      int lp = r - l;
      WedgePair xi, xip;
      xi.k = l;
      xi.l = lp;
      xip.k = lp;
      xip.l = l;
      for (IndexSet P : combinations(r, l)) {
        auto [a, b] = subselect(T, P);
        xi.add(a, b, minus_q_power(P.weight()));
      }
      for (IndexSet P : combinations(r, lp)) {
        auto [a, b] = subselect(T, P);
        xip.add(a, b, minus_q_power(P.weight()));
      }
      WedgePair got = wedge_project_pair(block_braid_inverse(R, wedge_embed_pair(xi), lp, l), lp);
      RatFunc s = minus_q_power(l * (l + 1) / 2 - lp * (lp + 1) / 2 - l * lp);
      for (auto& [key, v] : xip.coeffs) v *= s;
      out.push_back(make(name, ctx.N, {{"T", T.to_json()}, {"l", l}}, got == xip,
                         {{"image", wedge_vector_json(got)}, {"expected", wedge_vector_json(xip)}}));
    }
  }
  return out;
}

std::vector<Certificate> rmatrix_lemma(const CheckContext& ctx) {
  std::size_t n = 1u << ctx.N;
  return sweep<Certificate>(
      n * n,
      [&](std::size_t i) {
        IndexSet I = IndexSet::from_bits(static_cast<std::uint32_t>(i / n));
        IndexSet Ip = IndexSet::from_bits(static_cast<std::uint32_t>(i % n));
        auto rep = rmatrix_lemma_check(ctx.N, I, Ip);
        return make("rmatrix-lemma", ctx.N, {{"I", I.to_json()}, {"I'", Ip.to_json()}}, rep.pass,
                    {{"scalar", rep.scalar.to_json()}, {"image", wedge_vector_json(rep.image)},
                     {"xi'", wedge_vector_json(rep.xi_prime)}});
      },
      ctx.exec);
}

// qmatrix

std::vector<Certificate> qmatrix_pbw(const CheckContext& ctx) {
  const std::string name = "qmatrix-pbw";
  const auto& rs = quantum_matrix_algebra(ctx.N).rewriting();
  int top = ctx.N <= 3 ? 3 : 2;
  std::vector<Certificate> out;
  auto conf = check_confluence(rs, top, ctx.N);
  out.push_back(make(name, ctx.N, {{"kind", "confluence"}, {"degree", top}}, conf.ok(),
                     {{"failures", conf.failures}, {"first", conf.first_failure}}));
  for (int d = 1; d <= top; ++d) {
    auto dim = check_dimension(rs, d, Rational(3, 7));
    out.push_back(make(name, ctx.N, {{"kind", "dimension"}, {"degree", d}}, dim.ok(),
                       {{"expected", dim.expected}, {"quotient", dim.quotient_dimension}}));
  }
  return out;
}

std::vector<Certificate> qmatrix_rtable(const CheckContext& ctx) {
  using K = Bicharacter::Kind;
  const auto& b = bicharacter(ctx.N);
  std::vector<Certificate> out;
  for (int k = 1; k <= ctx.N; ++k)
    for (int l = 1; l <= ctx.N; ++l) {
      const auto& T = wedge_braiding(ctx.N, k, l);
      json bad = nullptr;
      for (IndexSet A : combinations(ctx.N, k))
        for (IndexSet A1 : combinations(ctx.N, k))
          for (IndexSet C1 : combinations(ctx.N, l))
            for (IndexSet C2 : combinations(ctx.N, l)) {
              if (!bad.is_null()) continue;
              RatFunc r = b.minor(K::R, A, A1, C1, C2);
              bool ok = r == T.value(A1, A, C1, C2) && b.minor(K::RInv, A, A1, C1, C2) == T.inverse(A1, A, C1, C2) &&
                        (r.is_zero() || support_condition_holds(A1, A, C1, C2));
              if (!ok)
                bad = {{"A", A.to_json()}, {"B", A1.to_json()}, {"C", C1.to_json()}, {"D", C2.to_json()},
                       {"r", r.to_json()}, {"table", T.value(A1, A, C1, C2).to_json()}};
            }
      out.push_back(make("qmatrix-rtable", ctx.N, {{"k", k}, {"l", l}}, bad.is_null(), bad));
    }
  return out;
}

std::vector<Certificate> qmatrix_convolution(const CheckContext& ctx) {
  using K = Bicharacter::Kind;
  const auto& b = bicharacter(ctx.N);
  std::vector<Certificate> out;
  for (int d = 0; d <= 2; ++d)
    for (int e = 0; e <= 2; ++e)
      for (auto kind : {K::RInv, K::RPrime}) {
        auto rep = check_convolution_inverse(b, kind, d, e);
        out.push_back(make("qmatrix-convolution", ctx.N,
                           {{"kind", kind == K::RInv ? "r_inv" : "r_prime"}, {"bidegree", {d, e}}}, rep.ok(),
                           {{"pairs", rep.pairs_checked}, {"failures", rep.failures}}));
      }
  return out;
}

// rea

NCPoly random_monomial(int N, int degree, Rng& rng) {
  std::uniform_int_distribution<int> d(0, N * N - 1);
  std::vector<int> g;
  for (int a = 0; a < degree; ++a) g.push_back(d(rng));
  return quantum_matrix_algebra(N).nf(NCPoly::monomial(word::make(g)));
}

std::vector<Certificate> rea_star_laws(const CheckContext& ctx) {
  const std::string name = "rea-star-laws";
  const auto& star = star_product(ctx.N);
  return sampled(ctx, name, samples_of(ctx, 20), [&](Rng& rng, int i) {
    std::uniform_int_distribution<int> deg(0, 2);
    NCPoly a = random_monomial(ctx.N, 1 + i % 2, rng), b = random_monomial(ctx.N, deg(rng), rng),
           c = random_monomial(ctx.N, 1, rng);
    NCPoly one = NCPoly::constant(1);
    bool unit = star(one, a) == a && star(a, one) == a;
    NCPoly l = star(star(a, b), c), r = star(a, star(b, c));
    return make(name, ctx.N, {{"a", a.to_json(ctx.N)}, {"b", b.to_json(ctx.N)}, {"c", c.to_json(ctx.N)}},
                unit && l == r, {{"unit", unit}, {"lhs", l.to_json(ctx.N)}, {"rhs", r.to_json(ctx.N)}});
  });
}

std::vector<Certificate> rea_reflection(const CheckContext& ctx) {
  auto rep = reflection_check_star(ctx.N, ReflectionLeg::Z23);
  return {make("rea-reflection", ctx.N, {{"leg", leg_name(rep.leg)}}, rep.holds(),
               {{"nonzero_entries", rep.nonzero_entries}, {"first", rep.first_nonzero}})};
}

std::vector<Certificate> rea_shape_table(const CheckContext&) {
  const std::string name = "rea-shape-table";
  auto shapes = enumerate_shapes(3);
  const auto& ref = reference_shapes_n3();
  std::vector<Certificate> out;
  if (shapes.size() != ref.size())
    out.push_back(make(name, 3, {{"families", ref.size()}}, false, {{"enumerated", shapes.size()}}));
  for (std::size_t f = 0; f < std::min(shapes.size(), ref.size()); ++f) {
    const auto& s = shapes[f];
    json labels = json::array();
    for (int k = 1; k <= s.rank(); ++k) labels.push_back(minor_label_string(s.label(k)));
    bool ok = s.tau == ref[f].tau && s.u == ref[f].u && labels == json(ref[f].labels);
    out.push_back(make(name, 3, {{"family", f}, {"tau", ref[f].tau}, {"u", ref[f].u}, {"labels", ref[f].labels}}, ok,
                       {{"tau", s.tau}, {"u", s.u}, {"labels", labels}}));
  }
  return out;
}

std::vector<Certificate> rea_qcomm(const CheckContext& ctx) {
  auto shapes = enumerate_shapes(ctx.N);
  auto per = sweep<std::vector<Certificate>>(
      shapes.size(), [&](std::size_t i) { return shape_qcomm_sweep(shapes[i], 2); }, ctx.exec);
  std::vector<Certificate> out;
  for (auto& v : per)
    for (auto& c : v) out.push_back(std::move(c));
  return out;
}

// classical

json shape_witness(const ShapeMatrix& S) { return S.to_json(); }

std::vector<Certificate> classical_shape_valid(const CheckContext& ctx) {
  const std::string name = "classical-shape-valid";
  return sampled(ctx, name, samples_of(ctx, 100), [&](Rng& rng, int) {
    auto z = sample::hermitian_of_shape(sample::shape(ctx.N, rng), rng);
    auto S = shape_of(HermitianMatrix::from_exact(z));
    bool ok = true;
    try {
      S.validate();
    } catch (const IllFormedInstance&) {
      ok = false;
    }
    CMatrix m = S.matrix();
    ok = ok && (m - m.adjoint()).cwiseAbs().maxCoeff() <= 1e-12;
    for (double x : eigenvalues(m))
      ok = ok && std::min({std::abs(x), std::abs(x - 1), std::abs(x + 1)}) <= 1e-10;
    return make(name, ctx.N, {{"z", HermitianMatrix::from_exact(z).to_json()}}, ok, {{"shape", shape_witness(S)}});
  });
}

std::vector<Certificate> classical_roundtrip(const CheckContext& ctx) {
  const std::string name = "classical-roundtrip";
  return sampled(ctx, name, samples_of(ctx, 100), [&](Rng& rng, int) {
    auto S = sample::shape(ctx.N, rng);
    auto lambda = sample::weight(S, rng);
    auto label = leaf_label(build_leaf_point(S, lambda));
    std::vector<double> want;
    json lam = json::array();
    for (const auto& x : lambda) {
      want.push_back(x.get_d());
      lam.push_back(to_string(x));
    }
    std::sort(want.begin(), want.end());
    bool ok = label.shape.tau == S.tau && label.shape.same_as(S, 1e-9) && label.weight.size() == want.size();
    for (std::size_t a = 0; ok && a < want.size(); ++a)
      ok = std::abs(label.weight[a] - want[a]) <= 1e-9 * std::max(1.0, std::abs(want[a]));
    return make(name, ctx.N, {{"shape", S.to_json()}, {"weight", lam}}, ok, label.to_json());
  });
}

std::array<int, 3> spectrum_signs(const CMatrix& z) {
  std::array<int, 3> c{0, 0, 0};
  double scale = std::max(1.0, z.cwiseAbs().maxCoeff());
  for (double x : eigenvalues(z)) ++c[x > 1e-9 * scale ? 0 : (x < -1e-9 * scale ? 1 : 2)];
  return c;
}

std::vector<Certificate> classical_sign(const CheckContext& ctx) {
  const std::string name = "classical-sign";
  return sampled(ctx, name, samples_of(ctx, 100), [&](Rng& rng, int) {
    auto z = sample::hermitian_of_shape(sample::shape(ctx.N, rng), rng);
    auto S = shape_of(HermitianMatrix::from_exact(z));
    auto a = S.signature(), b = spectrum_signs(z.to_complex());
    return make(name, ctx.N, {{"z", HermitianMatrix::from_exact(z).to_json()}}, a == b,
                {{"shape_sign", a}, {"spectrum_sign", b}});
  });
}

std::vector<Certificate> classical_invariance(const CheckContext& ctx) {
  const std::string name = "classical-invariance";
  int per = samples_of(ctx, 100);
  return sampled(ctx, name, 2 * per, [&](Rng& rng, int i) {
    auto z = sample::hermitian_of_shape(sample::shape(ctx.N, rng), rng);
    bool elementary = i < per;
    auto t = elementary ? sample::elementary(ctx.N, rng) : sample::diagonal(ctx.N, rng);
    bool ok = tn_invariance_check(z, t);
    json tj = json::array();
    for (int r = 0; r < ctx.N; ++r) {
      json row = json::array();
      for (int c = 0; c < ctx.N; ++c) row.push_back(t(r, c).to_json());
      tj.push_back(row);
    }
    return make(name, ctx.N, {{"generator", elementary ? "elementary" : "diagonal"}}, ok,
                {{"z", HermitianMatrix::from_exact(z).to_json()}, {"t", tj}});
  });
}

std::vector<Certificate> classical_decompose(const CheckContext& ctx) {
  const std::string name = "classical-decompose";
  return sampled(ctx, name, samples_of(ctx, 100), [&](Rng& rng, int i) {
    HermitianMatrix z = i % 2 == 0 ? HermitianMatrix::from_exact(sample::hermitian_of_shape(sample::shape(ctx.N, rng), rng))
                                   : HermitianMatrix::from_numeric(sample::numeric_hermitian(ctx.N, rng));
    auto d = decompose(z);
    bool ok = d.residual <= 1e-9;
    for (int a = 0; a < ctx.N; ++a) ok = ok && d.t(a, a).real() > 0 && std::abs(d.t(a, a).imag()) <= 1e-12;
    if (z.is_exact()) ok = ok && d.shape.same_as(shape_of(z), 1e-8);
    return make(name, ctx.N, {{"mode", z.is_exact() ? "exact" : "numeric"}}, ok,
                {{"z", z.to_json()}, {"residual", d.residual}, {"shape", d.shape.to_json()}});
  });
}

std::vector<Certificate> classical_antisymmetry(const CheckContext& ctx) {
  const std::string name = "classical-antisymmetry";
  return sampled(ctx, name, samples_of(ctx, 100), [&](Rng& rng, int) {
    auto rep = poisson_bivector(sample::numeric_hermitian(ctx.N, rng));
    return make(name, ctx.N, json::object(), rep.antisymmetry <= 1e-12 && rep.imaginary <= 1e-12,
                {{"antisymmetry", rep.antisymmetry}, {"imaginary", rep.imaginary}});
  });
}

std::vector<Certificate> classical_tangency(const CheckContext& ctx) {
  const std::string name = "classical-tangency";
  return sampled(ctx, name, samples_of(ctx, 50), [&](Rng& rng, int) {
    // Resample on a near-degenerate point; give up after a few tries.
    for (int attempt = 0; attempt < 8; ++attempt) {
      try {
        auto rep = leaf_tangency_check(sample::numeric_hermitian(ctx.N, rng));
        return make(name, ctx.N, {{"attempt", attempt}}, rep.ok(), rep.to_json());
      } catch (const IllConditioned&) {
      }
    }
    Certificate c = make(name, ctx.N, json::object(), true);
    c.status = Status::Inconclusive;
    c.witness = {{"reason", "every resampled point was ill-conditioned"}};
    return c;
  });
}

std::vector<Certificate> classical_jacobi(const CheckContext& ctx) {
  Rng rng(sample_seed(ctx.seed, "classical-jacobi", 0));
  auto rep = jacobi_check(ctx.N, samples_of(ctx, 100), rng);
  return {make("classical-jacobi", ctx.N, {{"samples", rep.samples}}, rep.symbolic_zero && rep.max_residual <= 1e-8,
               rep.to_json())};
}

std::vector<Certificate> cli_determinism(const CheckContext& ctx) {
  std::vector<Certificate> out;
  for (const char* probe : {"classical-roundtrip", "classical-tangency", "rea-star-laws"}) {
    const CheckSpec* spec = find_check(probe);
    if (!spec->applies_to(ctx.N)) continue;
    CheckContext a = ctx, b = ctx;
    a.exec = Exec::Serial;
    b.exec = Exec::Parallel;
    a.samples = b.samples = 10;
    auto dump = [&](const CheckContext& c) {
      std::string s;
      for (const auto& cert : spec->run(c)) s += cert.to_json().dump() + "\n";
      return s;
    };
    std::string first = dump(a), second = dump(b), third = dump(a);
    out.push_back(make("cli-determinism", ctx.N, {{"probe", probe}}, first == second && first == third,
                       {{"serial_bytes", first.size()}, {"parallel_bytes", second.size()}}));
  }
  return out;
}

std::vector<CheckSpec> build_registry() {
  using C = const CheckContext&;
  std::vector<CheckSpec> r = {
      {"coeff-ring-axioms", "coeff", "ring and field axioms on random triples", 0, 0, 1000, coeff_axioms},
      {"coeff-normalize", "coeff", "normalization is idempotent and matches cross multiplication", 0, 0, 300,
       coeff_normalize},
      {"coeff-eval", "coeff", "evaluation equals direct substitution at 20 random points", 0, 0, 50, coeff_eval},
      {"comb-dominance-lex", "combinatorics", "dominance implies lex order on C([6], k)", 0, 0, 0, comb_dominance},
      {"comb-weight-split", "combinatorics", "wt(I_K) + wt(I^K) = wt(I) for I in [6]", 0, 0, 0, comb_weights},
      {"comb-partition-lemma", "combinatorics", "partition lemma for all I, J in [7]", 0, 0, 0, comb_partition},
      {"comb-inversion-parity", "combinatorics", "inversion parity is multiplicative", 0, 0, 500, comb_parity},
      {"braid-relation", "braiding", "braid relation R12 R23 R12 = R23 R12 R23", 1, 4, 0, braid_relation},
      {"braid-hecke", "braiding", "Hecke relation (R - q^-1)(R + q) = 0", 1, 4, 0, braid_hecke},
      {"wedge-tables", "braiding", "wedge table support and both diagonal formulas, k, l <= 3", 1, 4, 0,
       [](C c) { return wedge_tables(c, false); }},
      {"wedge-composition", "braiding", "wedge table composed with its inverse is the identity", 1, 4, 0,
       [](C c) { return wedge_tables(c, true); }},
      {"wedge-embed-equivariance", "braiding", "embedding intertwines elementary braids, degree <= 3", 1, 4, 0,
       wedge_equivariance},
      {"wedge-rhat-acts", "braiding", "inverse braiding of the antisymmetric partition sum", 1, 4, 0, wedge_rhat_acts},
      {"rmatrix-lemma", "braiding", "scalar formula of the R-matrix lemma for all I, I'", 1, 4, 0, rmatrix_lemma},
      {"qmatrix-pbw", "qmatrix", "confluence and commutative dimension counts", 1, 4, 0, qmatrix_pbw},
      {"qmatrix-braidcomm", "qmatrix", "braided commutativity, k, l <= 2", 1, 3, 0,
       [](C c) { return identity_sweeps(c, "qmatrix-braidcomm", {"braidcomm1", "braidcomm2"}, false, 2); }},
      {"qmatrix-laplace", "qmatrix", "Laplace row and column expansions", 1, 3, 0,
       [](C c) { return identity_sweeps(c, "qmatrix-laplace", {"laplace-row", "laplace-col"}, false, c.N); }},
      {"qmatrix-muir", "qmatrix", "Muir expansions, k <= 3", 1, 3, 0,
       [](C c) { return identity_sweeps(c, "qmatrix-muir", {"muir", "muir2"}, false, std::min(c.N, 3)); }},
      {"qmatrix-rtable", "qmatrix", "bicharacter on minors equals the wedge tables and their support", 1, 3, 0,
       qmatrix_rtable},
      {"qmatrix-convolution", "qmatrix", "convolution inverses by re-substitution, bidegree <= (2, 2)", 1, 3, 0,
       qmatrix_convolution},
      {"rea-star-laws", "rea", "unit and associativity of the star product", 1, 3, 20, rea_star_laws},
      {"rea-reflection", "rea", "reflection equation for the star matrix", 1, 3, 0, rea_reflection},
      {"rea-gencomm", "rea", "general commutation relation, sizes <= 2", 1, 3, 0,
       [](C c) { return identity_sweeps(c, "rea-gencomm", {"gencomm"}, true, 2); }},
      {"rea-laplexp", "rea", "braided Laplace expansions, k <= 3", 1, 3, 0,
       [](C c) { return identity_sweeps(c, "rea-laplexp", {"laplexp1", "laplexp2"}, true, std::min(c.N, 3)); }},
      {"rea-muirbr", "rea", "braided Muir expansions, k <= 3, r <= 2", 1, 3, 0,
       [](C c) { return identity_sweeps(c, "rea-muirbr", {"muirbr", "muirbr2"}, true, std::min(c.N, 3), 2); }},
      {"rea-shape-table", "rea", "shape families at N = 3 against the reference table", 3, 3, 0, rea_shape_table},
      {"rea-qcomm", "rea", "q-commutation of leading minors modulo the shape ideal", 1, 3, 0, rea_qcomm},
      {"rea-semiclassical", "rea", "first-order star commutators equal the Poisson bracket", 1, 3, 0,
       [](C c) { return semiclassical_sweep(c.N); }},
      {"classical-shape-valid", "classical", "shape_of returns a valid shape matrix", 1, 4, 100,
       classical_shape_valid},
      {"classical-roundtrip", "classical", "build, shape and label round trip", 1, 4, 100, classical_roundtrip},
      {"classical-sign", "classical", "sign of the shape equals the sign of the spectrum", 1, 4, 100, classical_sign},
      {"classical-invariance", "classical", "shape is invariant under elementary and diagonal generators", 1, 4, 100,
       classical_invariance},
      {"classical-decompose", "classical", "t* S t decomposition residual and positive diagonal", 1, 4, 100,
       classical_decompose},
      {"classical-antisymmetry", "classical", "Poisson bivector is real and antisymmetric", 1, 4, 100,
       classical_antisymmetry},
      {"classical-tangency", "classical", "bivector range equals the intersection of orbit tangents", 1, 3, 50,
       classical_tangency},
      {"classical-jacobi", "classical", "Jacobi identity symbolically and at random points", 1, 3, 100,
       classical_jacobi},
      {"cli-determinism", "cli", "same seed gives identical certificate streams on both executors", 1, 4, 0,
       cli_determinism},
  };
  return r;
}

}  // namespace

const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> reg = build_registry();
  return reg;
}

const CheckSpec* find_check(const std::string& name) {
  for (const auto& c : check_registry())
    if (c.name == name) return &c;
  return nullptr;
}

Certificate summarize(const CheckSpec& spec, const CheckContext& ctx, const std::vector<Certificate>& certs) {
  Certificate s;
  s.check = spec.name;
  s.N = ctx.N;
  s.instance = {{"module", spec.module}, {"instances", certs.size()}};
  if (spec.default_samples > 0) s.instance["samples"] = ctx.samples > 0 ? ctx.samples : spec.default_samples;
  std::size_t fail = 0, inconclusive = 0;
  const Certificate* first = nullptr;
  for (const auto& c : certs) {
    if (c.status == Status::Fail) ++fail;
    if (c.status == Status::Inconclusive) ++inconclusive;
    if (!c.passed() && !first) first = &c;
  }
  s.status = fail ? Status::Fail : (inconclusive ? Status::Inconclusive : Status::Pass);
  if (first) {
    s.witness = {{"failures", fail}, {"inconclusive", inconclusive}};
    if (first) s.witness["first"] = first->to_json();
  }
  return s;
}

}  // namespace qrea
