// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qrea/cli/checks.hpp"
#include "qrea/rea/shapes.hpp"

using namespace qrea;

namespace {

struct Outcome {
  bool ok = true;
  std::size_t instances = 0;
  std::string detail;
};

// Runs registered checks at the given sizes; every instance must pass.
Outcome registered(std::vector<std::pair<std::string, std::vector<int>>> runs, int samples = 0) {
  Outcome o;
  for (const auto& [name, sizes] : runs) {
    const CheckSpec* spec = find_check(name);
    if (!spec) return {false, 0, "unregistered check " + name};
    for (int N : sizes) {
      CheckContext ctx{N, 20261014, Exec::Parallel, samples};
      for (const auto& c : spec->run(ctx)) {
        ++o.instances;
        if (!c.passed() && o.ok) {
          o.ok = false;
          o.detail = c.to_json().dump();
        }
      }
    }
  }
  if (o.instances == 0) return {false, 0, "no instances ran"};
  return o;
}

struct ExampleFamily {
  std::vector<int> tau;
  std::vector<std::string> u;
  std::vector<std::string> labels;
};

// The N = 3 family list as printed, rank 3, then 2, then 1.
const std::vector<ExampleFamily> kExample = {
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

Outcome example_table() {
  Outcome o;
  auto shapes = enumerate_shapes(3);
  int ranks[4] = {0, 0, 0, 0};
  for (const auto& s : shapes) ++ranks[s.rank()];
  if (ranks[3] != 4 || ranks[2] != 6 || ranks[1] != 3 || shapes.size() != kExample.size())
    return {false, shapes.size(), "family counts differ"};
  for (std::size_t f = 0; f < shapes.size(); ++f) {
    const auto& s = shapes[f];
    const auto& e = kExample[f];
    ++o.instances;
    if (s.tau != e.tau || s.u != e.u) {
      o.ok = false;
      o.detail += " family " + std::to_string(f + 1) + ": tau or u differs;";
      continue;
    }
    for (int k = 1; k <= s.rank(); ++k) {
      std::string got = minor_label_string(s.label(k)), want = e.labels[static_cast<std::size_t>(k - 1)];
      if (got != want) {
        o.ok = false;
        o.detail += " family " + std::to_string(f + 1) + " k=" + std::to_string(k) + ": " + got + " vs " + want + ";";
      }
    }
  }
  return o;
}

Outcome qcomm_full() {
  Outcome o = registered({{"rea-qcomm", {3}}});
  // 13 families, each k, every (I, J) of size 1 or 2: rank-weighted count 4*3+6*2+3 = 27 leading minors, 18 pairs each.
  if (o.ok && o.instances != 27 * 18) {
    o.ok = false;
    o.detail = "expected 486 instances, ran " + std::to_string(o.instances);
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "braid relation and Hecke identity, N = 2, 3, 4",
       [] { return registered({{"braid-relation", {2, 3, 4}}, {"braid-hecke", {2, 3, 4}}}); }},
      {2, "wedge tables: diagonals, inverse diagonals, support; k, l <= 3, N <= 4",
       [] { return registered({{"wedge-tables", {1, 2, 3, 4}}}); }},
      {3, "R-matrix lemma for all I, I' in [4]", [] { return registered({{"rmatrix-lemma", {4}}}); }},
      {4, "partition lemma for all I, J in [7]", [] { return registered({{"comb-partition-lemma", {3}}}); }},
      {5, "Laplace, Muir, braided commutativity at N = 3",
       [] { return registered({{"qmatrix-laplace", {3}}, {"qmatrix-muir", {3}}, {"qmatrix-braidcomm", {3}}}); }},
      {6, "reflection equation for the star matrix, N = 2, 3",
       [] { return registered({{"rea-reflection", {2, 3}}}); }},
      {7, "general commutation, braided Laplace and Muir at N = 3",
       [] { return registered({{"rea-gencomm", {3}}, {"rea-laplexp", {3}}, {"rea-muirbr", {3}}}); }},
      {8, "shape families at N = 3 against the printed table", example_table},
      {9, "q-commutation certificates, every N = 3 family, k, singleton and pair", qcomm_full},
      {10, "classical round trip, 100 random (S, lambda) at each N <= 4",
       [] { return registered({{"classical-roundtrip", {1, 2, 3, 4}}}, 100); }},
      {11, "T(N)-invariance, 100 pairs per generator type at N = 3",
       [] { return registered({{"classical-invariance", {3}}}, 100); }},
      {12, "tangency on 50 samples at N = 2, 3; Jacobi on 100 points",
       [] {
         Outcome a = registered({{"classical-tangency", {2, 3}}}, 50);
         Outcome b = registered({{"classical-jacobi", {2, 3}}}, 100);
         return Outcome{a.ok && b.ok, a.instances + b.instances, a.detail + b.detail};
       }},
      {13, "semiclassical limit, all generator pairs at N = 2 and N = 3",
       [] { return registered({{"rea-semiclassical", {2, 3}}}); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.run();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d  %s  [%zu instances, %.2f s]\n", o.ok ? "PASS" : "FAIL", c.id, c.title, o.instances, secs);
    if (!o.ok) {
      std::printf("        %s\n", o.detail.c_str());
      ++failed;
    }
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
