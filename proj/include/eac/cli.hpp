#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eac::cli {

// Runs one CLI invocation. args excludes the program name. JSON results go
// to `out`, diagnostics to `err`. Returns the process exit code:
//   0  success
//   1  selftest mismatch (a recomputed value differs from its pinned copy)
//   2  validation or domain failure (JSON error object on stdout)
//   3  unreadable input or malformed JSON
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace eac::cli
