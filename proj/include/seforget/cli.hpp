#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seforget::cli {

/// Process exit codes.
enum ExitStatus : int {
    success = 0,        ///< also a "true" answer
    negative = 1,       ///< "false" answer: not equivalent, no agreement, ...
    usage_error = 2,    ///< bad flags or unparsable input
    guard_tripped = 3,  ///< enumeration limit exceeded
};

/// Runs one command; `args` excludes the program name. Files named "-" are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace seforget::cli
