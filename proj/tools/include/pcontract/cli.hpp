#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcontract::cli {

/// Exit status: 0 yes/valid, 1 no/invalid, 2 error or cap.
enum exit_code : int { ok = 0, negative = 1, failure = 2 };

/// Runs one command line. `args` excludes the program name. "-" or an empty
/// path reads from `in` / writes to `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pcontract::cli
