#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qspec::cli {

/// Runs one subcommand; `args` excludes the program name. JSON goes to
/// `out`, diagnostics to `err`. Returns 0 on pass, 1 on a failed claim or a
/// counterexample, 2 on usage, parse or precondition errors.
int run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err);

} // namespace qspec::cli
