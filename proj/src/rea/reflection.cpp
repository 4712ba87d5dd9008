#include "qrea/rea/reflection.hpp"

#include <memory>
#include <mutex>

#include "qrea/braiding/braid.hpp"
#include "qrea/errors.hpp"
#include "qrea/rea/star.hpp"

namespace qrea {

const char* leg_name(ReflectionLeg leg) { return leg == ReflectionLeg::Z23 ? "Z23" : "Z13"; }

ReflectionLeg parse_leg(const std::string& s) {
  if (s == "Z23" || s == "23") return ReflectionLeg::Z23;
  if (s == "Z13" || s == "13") return ReflectionLeg::Z13;
  throw ParseError("unknown reflection leg '" + s + "'");
}

namespace {

struct PolyMatrix {
  int n;
  std::vector<NCPoly> e;
  explicit PolyMatrix(int n_) : n(n_), e(static_cast<std::size_t>(n_ * n_)) {}
  NCPoly& at(int r, int c) { return e[static_cast<std::size_t>(r * n + c)]; }
  const NCPoly& at(int r, int c) const { return e[static_cast<std::size_t>(r * n + c)]; }
};

PolyMatrix z_matrix(int N, ReflectionLeg leg) {
  PolyMatrix m(N * N);
  auto idx = [N](int a, int b) { return (a - 1) * N + (b - 1); };
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b)
      for (int c = 1; c <= N; ++c)
        for (int d = 1; d <= N; ++d) {
          if (leg == ReflectionLeg::Z23 && a == c)
            m.at(idx(a, b), idx(c, d)) = NCPoly::monomial(word::single(gen_index(N, b, d)));
          if (leg == ReflectionLeg::Z13 && b == d)
            m.at(idx(a, b), idx(c, d)) = NCPoly::monomial(word::single(gen_index(N, a, c)));
        }
  return m;
}

std::vector<RatFunc> braid_matrix(int N) {
  const BraidOperator& R = braid_operator(N);
  int n = N * N;
  std::vector<RatFunc> m(static_cast<std::size_t>(n * n));
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b)
      for (int c = 1; c <= N; ++c)
        for (int d = 1; d <= N; ++d)
          m[static_cast<std::size_t>(((a - 1) * N + b - 1) * n + (c - 1) * N + d - 1)] = R.entry(a, b, c, d);
  return m;
}

PolyMatrix left_scalar(const std::vector<RatFunc>& R, const PolyMatrix& M) {
  PolyMatrix out(M.n);
  for (int i = 0; i < M.n; ++i)
    for (int k = 0; k < M.n; ++k) {
      const RatFunc& r = R[static_cast<std::size_t>(i * M.n + k)];
      if (r.is_zero()) continue;
      for (int j = 0; j < M.n; ++j)
        if (!M.at(k, j).is_zero()) out.at(i, j).add_scaled(M.at(k, j), r);
    }
  return out;
}

PolyMatrix right_scalar(const PolyMatrix& M, const std::vector<RatFunc>& R) {
  PolyMatrix out(M.n);
  for (int i = 0; i < M.n; ++i)
    for (int k = 0; k < M.n; ++k) {
      if (M.at(i, k).is_zero()) continue;
      for (int j = 0; j < M.n; ++j) {
        const RatFunc& r = R[static_cast<std::size_t>(k * M.n + j)];
        if (!r.is_zero()) out.at(i, j).add_scaled(M.at(i, k), r);
      }
    }
  return out;
}

PolyMatrix product(const PolyMatrix& A, const PolyMatrix& B, const PolyProduct& mul) {
  PolyMatrix out(A.n);
  for (int i = 0; i < A.n; ++i)
    for (int k = 0; k < A.n; ++k) {
      if (A.at(i, k).is_zero()) continue;
      for (int j = 0; j < A.n; ++j)
        if (!B.at(k, j).is_zero()) out.at(i, j) += mul(A.at(i, k), B.at(k, j));
    }
  return out;
}

}  // namespace

std::vector<NCPoly> reflection_defect(int N, ReflectionLeg leg, const PolyProduct& mul) {
  auto R = braid_matrix(N);
  PolyMatrix Z = z_matrix(N, leg);
  PolyMatrix lhs = product(right_scalar(left_scalar(R, Z), R), Z, mul);
  PolyMatrix rhs = right_scalar(product(right_scalar(Z, R), Z, mul), R);
  std::vector<NCPoly> out(lhs.e.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lhs.e[i] - rhs.e[i];
  return out;
}

std::vector<NCPoly> rea_relations(int N, ReflectionLeg leg) {
  return reflection_defect(N, leg, [](const NCPoly& a, const NCPoly& b) { return a * b; });
}

ReflectionReport reflection_check_star(int N, ReflectionLeg leg) {
  const StarProduct& star = star_product(N);
  ReflectionReport rep;
  rep.leg = leg;
  rep.N = N;
  auto defect = reflection_defect(N, leg, [&](const NCPoly& a, const NCPoly& b) { return star(a, b); });
  for (std::size_t i = 0; i < defect.size(); ++i)
    if (!defect[i].is_zero() && rep.nonzero_entries++ == 0)
      rep.first_nonzero = "entry " + std::to_string(i) + ": " + defect[i].to_string(N);
  return rep;
}

ReaRewrite derive_rea_rewrite(int N, ReflectionLeg leg) {
  ReaRewrite out{RewriteSystem::from_relations(N * N, rea_relations(N, leg)), {}, {}, 0};
  out.confluence = check_confluence(out.rs, 3, N, 'Z');
  out.dimension = check_dimension(out.rs, 3, Rational(3, 7));
  if (!out.confluence.ok() || !out.dimension.ok())
    throw FlatnessCheckFailed("reflection equation rewriting is not flat at N = " + std::to_string(N) + ": " +
                              out.confluence.first_failure);
  const StarProduct& star = star_product(N);
  for (const NCPoly& rel : out.rs.relations()) {
    NCPoly image;
    for (const auto& [w, c] : rel.terms())
      image.add_scaled(star.words(word::sub(w, 0, 1), word::sub(w, 1, 1)), c);
    if (!image.is_zero()) ++out.star_failures;
  }
  return out;
}

const ReaRewrite& rea_rewrite(int N) {
  if (N < 1 || N > 4) throw DegreeOutOfRange("reflection equation algebra supported for 1 <= N <= 4");
  static std::mutex mu;
  static std::unique_ptr<ReaRewrite> cache[5];
  std::lock_guard lock(mu);
  if (!cache[N]) cache[N] = std::make_unique<ReaRewrite>(derive_rea_rewrite(N, ReflectionLeg::Z23));
  return *cache[N];
}

}  // namespace qrea
