#pragma once

#include <iosfwd>

namespace hamilton {

// Full command-line entry point: parses argv, runs one subcommand, writes
// a single-line JSON report to `out`. Returns 0 on success, 1 on domain
// errors (JSON error object on `out`), 2 on usage errors (message on
// `err`).
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hamilton
