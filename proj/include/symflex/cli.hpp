#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symflex {

/// Process exit statuses of the command line tool.
enum ExitStatus : int {
    exit_true = 0,
    exit_false = 1,
    exit_error = 2,
    exit_unknown = 3,
};

/// Runs one command line. `args` excludes the program name. Documents named
/// `-` are read from `in`; a missing file whose stem names a built-in
/// fixture loads that fixture.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace symflex
