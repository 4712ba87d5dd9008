#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qrea/certificate.hpp"
#include "qrea/parallel.hpp"

namespace qrea {

struct CheckContext {
  int N = 2;
  std::uint64_t seed = 1;
  Exec exec = Exec::Parallel;
  int samples = 0;  // 0 selects the check's default sample count
};

/// A registered invariant. run returns one certificate per instance, in a
/// canonical order that does not depend on the executor.
struct CheckSpec {
  std::string name;
  std::string module;
  std::string description;
  int min_N = 0, max_N = 0;  // 0 and 0: independent of N, run once at any N
  int default_samples = 0;
  std::function<std::vector<Certificate>(const CheckContext&)> run;

  bool applies_to(int N) const { return (min_N == 0 && max_N == 0) || (N >= min_N && N <= max_N); }
};

const std::vector<CheckSpec>& check_registry();
const CheckSpec* find_check(const std::string& name);

/// One aggregated certificate for a whole check: counts, and the first
/// non-passing instance as witness.
Certificate summarize(const CheckSpec& spec, const CheckContext& ctx, const std::vector<Certificate>& certs);

/// Expected N = 3 shape families in enumeration order: tau, u symbols, and
/// the leading minor names for k = 1..rank.
struct ReferenceShape {
  std::vector<int> tau;
  std::vector<std::string> u;
  std::vector<std::string> labels;
};
const std::vector<ReferenceShape>& reference_shapes_n3();

/// Independent generator seed for sample i of a named check.
std::uint64_t sample_seed(std::uint64_t master, const std::string& check, std::size_t i);

}  // namespace qrea
