// Command-line front end. Exit codes:
//   0 success / schedule satisfies
//   1 schedule does not satisfy
//   2 invalid flags, invalid instance or malformed document
//   3 not constructible (regime gap, payload escape, no holder)
//   4 decentralized-constraint violation
//   5 search cap exceeded
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cdpic::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cdpic::cli
