#include "qrea/rea/semiclassical.hpp"

#include "qrea/classical/poisson.hpp"
#include "qrea/errors.hpp"
#include "qrea/rea/star.hpp"

namespace qrea {

Certificate semiclassical_bracket_check(int N, int i, int j, int k, int l) {
  if (N < 1 || N > 3) throw DegreeOutOfRange("semiclassical check needs N <= 3");
  for (int x : {i, j, k, l})
    if (x < 1 || x > N) throw IllFormedInstance("generator index outside [N]");
  const auto& star = star_product(N);
  NCPoly a = NCPoly::monomial(word::single(gen_index(N, i, j)));
  NCPoly b = NCPoly::monomial(word::single(gen_index(N, k, l)));
  NCPoly comm = star(a, b) - star(b, a);
  CommPoly c0, c1;
  for (Word w : comm.sorted_words()) {
    auto [v0, v1] = comm.coefficient(w).taylor1_at_1();
    c0.add(word::letters(w), GaussRat(v0));
    c1.add(word::letters(w), GaussRat(v1));
  }
  CommPoly expect = bivector_entry(N, i, j, k, l);
  Certificate c;
  c.check = "rea-semiclassical";
  c.N = N;
  c.instance = {{"ij", {i, j}}, {"kl", {k, l}}};
  if (!c0.is_zero() || !(c1 == expect)) {
    c.status = Status::Fail;
    c.witness = {{"constant", c0.to_string(N)}, {"first_order", c1.to_string(N)}, {"bivector", expect.to_string(N)}};
  }
  return c;
}

std::vector<Certificate> semiclassical_sweep(int N) {
  std::vector<Certificate> out;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      for (int k = 1; k <= N; ++k)
        for (int l = 1; l <= N; ++l) out.push_back(semiclassical_bracket_check(N, i, j, k, l));
  return out;
}

}  // namespace qrea
