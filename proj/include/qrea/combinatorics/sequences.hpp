#pragma once

#include <vector>

namespace qrea {

/// Letter counts of a sequence over [N]; index 0 is unused.
using Content = std::vector<int>;

Content content_of(int N, const std::vector<int>& seq);
/// All distinct sequences with the given counts, in lex order. Empty if a count is negative.
std::vector<std::vector<int>> sequences_with_content(const Content& c);
/// All sequences of length d over [N], in lex order.
std::vector<std::vector<int>> all_sequences(int N, int d);

}  // namespace qrea
