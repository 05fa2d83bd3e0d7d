#pragma once

// Command-line front end.  `run` is the whole program: tools/phachain.cpp is a
// two-line main that forwards argv.  Keeping it a library function lets the
// test suite drive every subcommand in-process and capture stdout/stderr.
//
// Exit codes:
//   0  success (payload on stdout)
//   1  computation failure (pole, singular Wronskian, blow-up, vanishing
//      denominator); a structured error object is printed as JSON on stdout
//   2  validation / usage error (bad flags, malformed rationals, bad input
//      files); human-readable message on stderr

#include <ostream>
#include <string>
#include <vector>

namespace pha::cli {

// args excludes the program name (like argv + 1).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pha::cli
