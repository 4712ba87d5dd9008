#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qrea {

/// Runs one command line (args excludes the program name). Certificates go
/// to out as JSON lines, the human summary to err. Returns 0 when every
/// certificate passes, 1 on any fail or inconclusive, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrea
