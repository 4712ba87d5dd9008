#include "qrea/classical/shape.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qrea/errors.hpp"

namespace qrea {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  mpz_class n = r.get_num(), d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  Rational out(sn, sd);
  out.canonicalize();
  return out;
}

/// w / |w| exactly when |w| is rational.
std::optional<GaussRat> exact_phase(const GaussRat& w) {
  auto a = exact_sqrt(w.norm2());
  if (!a || sgn(*a) == 0) return std::nullopt;
  return GaussRat(w.re / *a, w.im / *a);
}

}  // namespace

IndexSet ShapeMatrix::support() const {
  IndexSet P;
  for (int i = 0; i < N(); ++i)
    if (std::abs(u[ix(i)]) > 0.5) P = P | IndexSet{i + 1};
  return P;
}

bool ShapeMatrix::fully_exact() const {
  return std::all_of(exact_u.begin(), exact_u.end(), [](const auto& x) { return x.has_value(); });
}

CMatrix ShapeMatrix::matrix() const {
  CMatrix S = CMatrix::Zero(N(), N());
  for (int i = 0; i < N(); ++i) S(tau[ix(i)] - 1, i) = u[ix(i)];
  return S;
}

std::optional<GaussMatrix> ShapeMatrix::exact_matrix() const {
  if (!fully_exact()) return std::nullopt;
  GaussMatrix S(N());
  for (int i = 0; i < N(); ++i) S(tau[ix(i)] - 1, i) = *exact_u[ix(i)];
  return S;
}

std::array<int, 3> ShapeMatrix::signature() const {
  std::array<int, 3> s{0, 0, 0};
  for (int i = 0; i < N(); ++i) {
    if (std::abs(u[ix(i)]) < 0.5) {
      ++s[2];
    } else if (tau[ix(i)] != i + 1) {
      ++s[tau[ix(i)] > i + 1 ? 0 : 1];
    } else {
      ++s[u[ix(i)].real() > 0 ? 0 : 1];
    }
  }
  return s;
}

bool ShapeMatrix::same_as(const ShapeMatrix& o, double tol) const {
  if (tau != o.tau) return false;
  for (int i = 0; i < N(); ++i) {
    const auto &a = exact_u[ix(i)], &b = o.exact_u[ix(i)];
    if (a && b) {
      if (!(*a == *b)) return false;
    } else if (std::abs(u[ix(i)] - o.u[ix(i)]) > tol) {
      return false;
    }
  }
  return true;
}

void ShapeMatrix::validate(double tol) const {
  int n = N();
  if (static_cast<int>(u.size()) != n || static_cast<int>(exact_u.size()) != n)
    throw IllFormedInstance("tau and u lengths differ");
  for (int i = 1; i <= n; ++i) {
    int t = tau[ix(i - 1)];
    if (t < 1 || t > n || tau[ix(t - 1)] != i) throw IllFormedInstance("tau is not an involution");
    Complex v = u[ix(i - 1)];
    double m = std::abs(v);
    if (m > tol && std::abs(m - 1) > tol) throw IllFormedInstance("phase is neither zero nor unimodular");
    if (t != i && m < 0.5) throw IllFormedInstance("u vanishes at a point moved by tau");
    if (std::abs(u[ix(t - 1)] - std::conj(v)) > tol) throw IllFormedInstance("shape is not self-adjoint");
  }
}

nlohmann::json ShapeMatrix::to_json() const {
  nlohmann::json us = nlohmann::json::array();
  for (int i = 0; i < N(); ++i) {
    if (exact_u[ix(i)]) {
      us.push_back(exact_u[ix(i)]->to_json());
    } else {
      us.push_back({{"re", u[ix(i)].real()}, {"im", u[ix(i)].imag()}});
    }
  }
  return {{"tau", tau}, {"u", us}, {"exact", fully_exact()}};
}

ShapeMatrix ShapeMatrix::from_exact(std::vector<int> tau, std::vector<GaussRat> u) {
  ShapeMatrix s;
  s.tau = std::move(tau);
  for (const auto& x : u) {
    s.u.push_back(x.to_complex());
    s.exact_u.emplace_back(x);
  }
  s.validate();
  return s;
}

ShapeMatrix ShapeMatrix::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("tau") || !j.contains("u")) throw ParseError("shape JSON needs \"tau\" and \"u\"");
  ShapeMatrix s;
  try {
    s.tau = j.at("tau").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad tau: ") + e.what());
  }
  for (const auto& v : j.at("u")) {
    if (v.is_object()) {
      bool exact = (!v.contains("re") || !v.at("re").is_number_float()) && (!v.contains("im") || !v.at("im").is_number_float());
      if (exact) {
        GaussRat g = GaussRat::from_json(v);
        s.u.push_back(g.to_complex());
        s.exact_u.emplace_back(g);
      } else {
        s.u.emplace_back(v.value("re", 0.0), v.value("im", 0.0));
        s.exact_u.emplace_back(std::nullopt);
      }
    } else if (v.is_number_integer()) {
      s.u.emplace_back(static_cast<double>(v.get<long>()));
      s.exact_u.emplace_back(GaussRat(v.get<long>()));
    } else if (v.is_number()) {
      s.u.emplace_back(v.get<double>());
      s.exact_u.emplace_back(std::nullopt);
    } else if (v.is_string()) {
      std::string t = v.get<std::string>();
      GaussRat g;
      if (t == "i" || t == "+i") {
        g = GaussRat::i_unit();
      } else if (t == "-i") {
        g = -GaussRat::i_unit();
      } else {
        g = GaussRat(parse_rational(t.front() == '+' ? t.substr(1) : t));
      }
      s.u.push_back(g.to_complex());
      s.exact_u.emplace_back(g);
    } else {
      throw ParseError("bad phase entry");
    }
  }
  s.validate(1e-9);
  return s;
}

namespace {

struct MinorValue {
  bool nonzero = false;
  Complex value;
  std::optional<GaussRat> exact;
};

}  // namespace

ShapeMatrix shape_of(const HermitianMatrix& z, double tol) {
  int N = z.N();
  CMatrix zc = z.value();
  double scale = N == 0 ? 1.0 : std::max(1.0, zc.cwiseAbs().maxCoeff());
  auto minor = [&](IndexSet R, IndexSet C) {
    MinorValue m;
    if (z.is_exact()) {
      GaussRat g = z.exact.minor(R, C);
      m.nonzero = !g.is_zero();
      m.value = g.to_complex();
      m.exact = g;
    } else {
      std::vector<int> r = R.elements(), c = C.elements();
      int k = static_cast<int>(r.size());
      CMatrix sub(k, k);
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) sub(a, b) = zc(r[ix(a)] - 1, c[ix(b)] - 1);
      m.value = sub.determinant();
      m.nonzero = std::abs(m.value) > tol * std::pow(scale, k);
    }
    return m;
  };

  ShapeMatrix S;
  S.tau.resize(ix(N));
  for (int i = 0; i < N; ++i) S.tau[ix(i)] = i + 1;
  S.u.assign(ix(N), Complex(0));
  S.exact_u.assign(ix(N), GaussRat());
  IndexSet Pk, Tk;
  std::vector<int> images;
  MinorValue prev{true, Complex(1), GaussRat(1)};
  int prev_len = 0;
  std::map<int, int> t;
  for (int k = 1; k <= N; ++k) {
    std::optional<std::pair<IndexSet, IndexSet>> found;
    MinorValue mv;
    for (IndexSet J : combinations(N, k)) {
      for (IndexSet I : combinations(N, k)) {
        mv = minor(I, J);
        if (mv.nonzero) {
          found = {J, I};
          break;
        }
      }
      if (found) break;
    }
    if (!found) break;
    auto [J, I] = *found;
    IndexSet newP = J - Pk, newT = I - Tk;
    if (!Pk.subset_of(J) || !Tk.subset_of(I) || newP.size() != 1 || newT.size() != 1 || newP.min() < Pk.max())
      throw InconsistentPivots("pivot at size " + std::to_string(k) + " does not extend the previous one");
    int p = newP.min(), tp = newT.min();
    t[p] = tp;
    images.push_back(tp);
    int len = inversions(images);
    Complex w = mv.value / prev.value;
    if ((len - prev_len) % 2 != 0) w = -w;
    S.u[ix(p - 1)] = w / std::abs(w);
    std::optional<GaussRat> ew;
    if (mv.exact && prev.exact) {
      GaussRat g = *mv.exact / *prev.exact;
      if ((len - prev_len) % 2 != 0) g = -g;
      ew = exact_phase(g);
    }
    S.exact_u[ix(p - 1)] = ew;
    Pk = J;
    Tk = I;
    prev = mv;
    prev_len = len;
  }
  for (auto [p, tp] : t) {
    auto it = t.find(tp);
    if (it == t.end() || it->second != p) throw InconsistentPivots("pivots do not define an involution on the support");
    S.tau[ix(p - 1)] = tp;
  }
  // Self-adjointness of the recovered phases.
  for (auto [p, tp] : t) {
    const auto &a = S.exact_u[ix(p - 1)], &b = S.exact_u[ix(tp - 1)];
    bool ok = a && b ? *b == a->conj() : std::abs(S.u[ix(tp - 1)] - std::conj(S.u[ix(p - 1)])) < 1e-8;
    if (!ok) throw InconsistentPivots("recovered phases are not self-adjoint");
  }
  return S;
}

GaussMatrix congruence(const GaussMatrix& z, const GaussMatrix& t) { return t.adjoint() * z * t; }

Decomposition decompose(const HermitianMatrix& z, double tol) {
  int N = z.N();
  CMatrix x = z.value();
  CMatrix s = CMatrix::Identity(N, N);
  double scale = N == 0 ? 1.0 : std::max(1.0, x.cwiseAbs().maxCoeff());
  double eps = tol * scale;
  // x <- e* x e and s <- s e for e = I - a e_{cj}, c < j.
  auto step = [&](int c, int j, Complex a) {
    x.col(j) -= a * x.col(c);
    x.row(j) -= std::conj(a) * x.row(c);
    s.col(j) -= a * s.col(c);
  };
  std::vector<bool> done(ix(N), false);
  std::vector<int> tau(ix(N));
  for (int i = 0; i < N; ++i) tau[ix(i)] = i;
  for (int c = 0; c < N; ++c) {
    if (done[ix(c)]) continue;
    int r = -1;
    for (int i = c; i < N && r < 0; ++i)
      if (!done[ix(i)] && std::abs(x(i, c)) > eps) r = i;
    done[ix(c)] = true;
    if (r < 0) continue;
    if (r == c) {
      for (int j = c + 1; j < N; ++j)
        if (std::abs(x(c, j)) > 0) step(c, j, x(c, j) / x(c, c));
      continue;
    }
    for (int i = r + 1; i < N; ++i)
      if (std::abs(x(i, c)) > 0) step(r, i, std::conj(x(i, c) / x(r, c)));
    for (int j = c + 1; j < N; ++j) {
      if (std::abs(x(r, j)) == 0) continue;
      Complex a = x(r, j) / x(r, c);
      step(c, j, j == r ? a / 2.0 : a);
    }
    done[ix(r)] = true;
    tau[ix(c)] = r;
    tau[ix(r)] = c;
  }
  Decomposition d;
  d.shape.tau.resize(ix(N));
  d.shape.u.assign(ix(N), Complex(0));
  d.shape.exact_u.assign(ix(N), std::nullopt);
  Eigen::VectorXd sigma = Eigen::VectorXd::Ones(N);
  for (int c = 0; c < N; ++c) {
    int r = tau[ix(c)];
    d.shape.tau[ix(c)] = r + 1;
    Complex w = x(r, c);
    if (std::abs(w) <= eps) continue;
    sigma(c) = 1.0 / std::sqrt(std::abs(w));
    d.shape.u[ix(c)] = r == c ? Complex(w.real() > 0 ? 1.0 : -1.0) : w / std::abs(w);
  }
  for (int c = 0; c < N; ++c) s.col(c) *= sigma(c);
  // t = s^-1, upper triangular
  d.t = s.triangularView<Eigen::Upper>().solve(CMatrix::Identity(N, N));
  d.t = d.t.triangularView<Eigen::Upper>();
  CMatrix back = d.t.adjoint() * d.shape.matrix() * d.t;
  d.residual = N == 0 ? 0.0 : (back - z.value()).cwiseAbs().maxCoeff();
  // Exact forms of the phases where they are plainly +-1 or +-i.
  for (int c = 0; c < N; ++c) {
    Complex v = d.shape.u[ix(c)];
    for (GaussRat g : {GaussRat(0), GaussRat(1), GaussRat(-1), GaussRat::i_unit(), -GaussRat::i_unit()})
      if (std::abs(v - g.to_complex()) < 1e-12) d.shape.u[ix(c)] = g.to_complex(), d.shape.exact_u[ix(c)] = g;
  }
  return d;
}

nlohmann::json LeafLabel::to_json() const { return {{"shape", shape.to_json()}, {"weight", weight}}; }

LeafLabel leaf_label(const HermitianMatrix& z) { return {shape_of(z), eigenvalues(z.value())}; }

std::array<int, 3> weight_signature(const std::vector<double>& weight, double tol) {
  std::array<int, 3> s{0, 0, 0};
  for (double x : weight) ++s[x > tol ? 0 : (x < -tol ? 1 : 2)];
  return s;
}

namespace {

struct Assignment {
  std::vector<int> fixed;                    // index into the weight, per point
  std::vector<std::pair<int, int>> pair;     // (positive, negative) per lower pair point
};

// Hands out positives and negatives: pairs first in order, then fixed points.
template <class T>
Assignment assign_weights(const ShapeMatrix& S, const std::vector<T>& lambda) {
  int N = S.N();
  if (static_cast<int>(lambda.size()) != N) throw SizeMismatch("weight needs N entries");
  std::vector<int> pos, neg, zero;
  for (int i = 0; i < N; ++i) {
    int sg = lambda[ix(i)] > 0 ? 0 : (lambda[ix(i)] < 0 ? 1 : 2);
    (sg == 0 ? pos : sg == 1 ? neg : zero).push_back(i);
  }
  std::sort(pos.begin(), pos.end(), [&](int a, int b) { return lambda[ix(a)] > lambda[ix(b)]; });
  std::sort(neg.begin(), neg.end(), [&](int a, int b) { return lambda[ix(a)] < lambda[ix(b)]; });
  auto sig = S.signature();
  if (sig[0] != static_cast<int>(pos.size()) || sig[1] != static_cast<int>(neg.size()) ||
      sig[2] != static_cast<int>(zero.size()))
    throw SignMismatch("signature of the shape differs from the signature of the weight");
  Assignment a;
  a.fixed.assign(ix(N), -1);
  a.pair.assign(ix(N), {-1, -1});
  std::size_t ip = 0, in = 0, iz = 0;
  for (int i = 0; i < N; ++i)
    if (S.tau[ix(i)] > i + 1) a.pair[ix(i)] = {pos[ip++], neg[in++]};
  for (int i = 0; i < N; ++i) {
    if (S.tau[ix(i)] != i + 1) continue;
    if (std::abs(S.u[ix(i)]) < 0.5) {
      a.fixed[ix(i)] = zero[iz++];
    } else {
      a.fixed[ix(i)] = S.u[ix(i)].real() > 0 ? pos[ip++] : neg[in++];
    }
  }
  return a;
}

}  // namespace

HermitianMatrix build_leaf_point(const ShapeMatrix& S, const std::vector<Rational>& lambda) {
  S.validate();
  int N = S.N();
  Assignment a = assign_weights(S, lambda);
  bool exact = S.fully_exact();
  for (int i = 0; exact && i < N; ++i)
    if (S.tau[ix(i)] > i + 1 && !exact_sqrt(-lambda[ix(a.pair[ix(i)].first)] * lambda[ix(a.pair[ix(i)].second)]))
      exact = false;
  if (!exact) {
    std::vector<double> d;
    for (const auto& x : lambda) d.push_back(x.get_d());
    return build_leaf_point(S, d);
  }
  GaussMatrix z(N);
  for (int i = 0; i < N; ++i) {
    int j = S.tau[ix(i)] - 1;
    if (j == i) {
      z(i, i) = GaussRat(lambda[ix(a.fixed[ix(i)])]);
    } else if (j > i) {
      const Rational& l1 = lambda[ix(a.pair[ix(i)].first)];
      Rational l2 = -lambda[ix(a.pair[ix(i)].second)];
      GaussRat beta = GaussRat(*exact_sqrt(l1 * l2)) * *S.exact_u[ix(j)];
      z(i, j) = beta;
      z(j, i) = beta.conj();
      z(j, j) = GaussRat(l1 - l2);
    }
  }
  return HermitianMatrix::from_exact(std::move(z));
}

HermitianMatrix build_leaf_point(const ShapeMatrix& S, const std::vector<double>& lambda) {
  S.validate();
  int N = S.N();
  Assignment a = assign_weights(S, lambda);
  CMatrix z = CMatrix::Zero(N, N);
  for (int i = 0; i < N; ++i) {
    int j = S.tau[ix(i)] - 1;
    if (j == i) {
      z(i, i) = lambda[ix(a.fixed[ix(i)])];
    } else if (j > i) {
      double l1 = lambda[ix(a.pair[ix(i)].first)], l2 = -lambda[ix(a.pair[ix(i)].second)];
      Complex beta = std::sqrt(l1 * l2) * S.u[ix(j)];
      z(i, j) = beta;
      z(j, i) = std::conj(beta);
      z(j, j) = l1 - l2;
    }
  }
  return HermitianMatrix::from_numeric(std::move(z));
}

bool tn_invariance_check(const GaussMatrix& z, const GaussMatrix& t) {
  if (!t.is_upper_triangular()) throw NotTriangular("t has entries below the diagonal");
  for (int i = 0; i < t.size(); ++i)
    if (!t(i, i).is_real() || sgn(t(i, i).re) <= 0) throw NotTriangular("diagonal of t must be positive");
  ShapeMatrix a = shape_of(HermitianMatrix::from_exact(z));
  ShapeMatrix b = shape_of(HermitianMatrix::from_exact(congruence(z, t)));
  return a.same_as(b);
}

namespace sample {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational positive_rational(Rng& rng) {
  Rational r(uniform(rng, 1, 20), uniform(rng, 1, 4));
  r.canonicalize();
  return r;
}

Rational small_rational(Rng& rng) {
  Rational r(uniform(rng, -9, 9), uniform(rng, 1, 5));
  r.canonicalize();
  return r;
}

GaussRat random_phase(Rng& rng) {
  static const std::vector<std::pair<int, int>> triples{{1, 0}, {0, 1}, {3, 4}, {4, 3}, {5, 12}, {12, 5}, {8, 15}};
  static const std::vector<int> hyp{1, 1, 5, 5, 13, 13, 17};
  std::size_t k = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(triples.size()) - 1));
  Rational a(triples[k].first, hyp[k]), b(triples[k].second, hyp[k]);
  a.canonicalize();
  b.canonicalize();
  if (uniform(rng, 0, 1)) a = -a;
  if (uniform(rng, 0, 1)) b = -b;
  return {a, b};
}

}  // namespace

ShapeMatrix shape(int N, Rng& rng) {
  std::vector<int> tau(ix(N), 0);
  std::vector<GaussRat> u(ix(N));
  for (int i = 0; i < N; ++i) {
    if (tau[ix(i)] != 0) continue;
    std::vector<int> free;
    for (int j = i + 1; j < N; ++j)
      if (tau[ix(j)] == 0) free.push_back(j);
    if (!free.empty() && uniform(rng, 0, 2) == 0) {
      int j = free[ix(uniform(rng, 0, static_cast<int>(free.size()) - 1))];
      tau[ix(i)] = j + 1;
      tau[ix(j)] = i + 1;
      GaussRat p = random_phase(rng);
      u[ix(i)] = p;
      u[ix(j)] = p.conj();
    } else {
      tau[ix(i)] = i + 1;
      int v = uniform(rng, 0, 3);
      u[ix(i)] = v == 0 ? GaussRat(0) : (v == 1 ? GaussRat(-1) : GaussRat(1));
    }
  }
  return ShapeMatrix::from_exact(std::move(tau), std::move(u));
}

std::vector<Rational> weight(const ShapeMatrix& S, Rng& rng) {
  auto sig = S.signature();
  std::vector<Rational> w;
  for (int i = 0; i < sig[0]; ++i) w.push_back(positive_rational(rng));
  for (int i = 0; i < sig[1]; ++i) w.push_back(-positive_rational(rng));
  for (int i = 0; i < sig[2]; ++i) w.emplace_back(0);
  std::sort(w.begin(), w.end());
  return w;
}

GaussMatrix enhanced(const ShapeMatrix& S, Rng& rng) {
  if (!S.fully_exact()) throw IllFormedInstance("enhanced sampling needs exact phases");
  int N = S.N();
  GaussMatrix E(N);
  for (int i = 0; i < N; ++i) {
    int j = S.tau[ix(i)] - 1;
    if (j == i) {
      E(i, i) = *S.exact_u[ix(i)] * GaussRat(positive_rational(rng));
    } else if (j > i) {
      GaussRat beta = GaussRat(positive_rational(rng)) * *S.exact_u[ix(j)];
      E(i, j) = beta;
      E(j, i) = beta.conj();
      E(j, j) = GaussRat(small_rational(rng));
    }
  }
  return E;
}

GaussMatrix triangular(int N, Rng& rng) {
  GaussMatrix t(N);
  for (int i = 0; i < N; ++i) {
    t(i, i) = GaussRat(positive_rational(rng));
    for (int j = i + 1; j < N; ++j) t(i, j) = GaussRat(small_rational(rng), small_rational(rng));
  }
  return t;
}

GaussMatrix elementary(int N, Rng& rng) {
  GaussMatrix t = GaussMatrix::identity(N);
  if (N < 2) return t;
  int r = uniform(rng, 0, N - 2);
  GaussRat l;
  while (l.is_zero()) l = GaussRat(small_rational(rng), small_rational(rng));
  t(r, r + 1) = l;
  return t;
}

GaussMatrix diagonal(int N, Rng& rng) {
  GaussMatrix t(N);
  for (int i = 0; i < N; ++i) t(i, i) = GaussRat(positive_rational(rng));
  return t;
}

GaussMatrix hermitian_of_shape(const ShapeMatrix& S, Rng& rng) { return congruence(enhanced(S, rng), triangular(S.N(), rng)); }

CMatrix numeric_hermitian(int N, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix a(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) a(i, j) = Complex(g(rng), g(rng));
  return (a + a.adjoint()) / 2.0;
}

}  // namespace sample

}  // namespace qrea
