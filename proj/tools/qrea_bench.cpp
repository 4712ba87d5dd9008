// Serial reference against the OpenMP path for the heavier sweeps. Each
// kernel runs once to warm the shared caches, then is timed on both
// executors; the certificate streams must match byte for byte.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qrea/cli/checks.hpp"

using namespace qrea;

namespace {

std::string stream_of(const std::vector<Certificate>& certs) {
  std::string s;
  for (const auto& c : certs) s += c.to_json().dump() + "\n";
  return s;
}

double best_of(int reps, const CheckSpec& spec, const CheckContext& ctx, std::string& out) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    out = stream_of(spec.run(ctx));
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  struct Kernel {
    const char* check;
    int N;
    int samples;
  };
  const Kernel kernels[] = {
      {"qmatrix-muir", 3, 0},          {"rea-muirbr", 3, 0},           {"rea-qcomm", 3, 0},
      {"rmatrix-lemma", 4, 0},         {"comb-partition-lemma", 3, 0}, {"classical-roundtrip", 4, 2000},
      {"classical-tangency", 3, 500},  {"classical-decompose", 4, 2000},
  };
  std::printf("threads: %d, best of %d\n", worker_count(), reps);
  std::printf("%-24s %3s %10s %10s %8s %s\n", "kernel", "N", "serial s", "parallel s", "speedup", "identical");
  bool all_same = true;
  for (const auto& k : kernels) {
    const CheckSpec* spec = find_check(k.check);
    CheckContext ctx{k.N, 7, Exec::Serial, k.samples};
    std::string warm, serial, parallel;
    warm = stream_of(spec->run(ctx));
    double ts = best_of(reps, *spec, ctx, serial);
    ctx.exec = Exec::Parallel;
    double tp = best_of(reps, *spec, ctx, parallel);
    bool same = serial == parallel && serial == warm;
    all_same = all_same && same;
    std::printf("%-24s %3d %10.4f %10.4f %8.2f %s\n", k.check, k.N, ts, tp, tp > 0 ? ts / tp : 0.0, same ? "yes" : "NO");
  }
  return all_same ? 0 : 1;
}
