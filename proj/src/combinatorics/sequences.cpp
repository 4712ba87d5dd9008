#include "qrea/combinatorics/sequences.hpp"

#include <algorithm>

namespace qrea {

Content content_of(int N, const std::vector<int>& seq) {
  Content c(static_cast<std::size_t>(N + 1), 0);
  for (int x : seq) ++c[static_cast<std::size_t>(x)];
  return c;
}

std::vector<std::vector<int>> sequences_with_content(const Content& c) {
  std::vector<int> base;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] < 0) return {};
    base.insert(base.end(), static_cast<std::size_t>(c[i]), static_cast<int>(i));
  }
  std::vector<std::vector<int>> out;
  do out.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  return out;
}

std::vector<std::vector<int>> all_sequences(int N, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> s(static_cast<std::size_t>(d), 1);
  for (;;) {
    out.push_back(s);
    int p = d - 1;
    while (p >= 0 && s[static_cast<std::size_t>(p)] == N) s[static_cast<std::size_t>(p--)] = 1;
    if (p < 0) break;
    ++s[static_cast<std::size_t>(p)];
  }
  return out;
}

}  // namespace qrea
