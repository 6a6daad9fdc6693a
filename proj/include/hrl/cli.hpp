#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hrl::cli {

// Runs one command line (without the program name) and writes everything the
// tool would print to out/err. Returns the process exit code: 0 success,
// 1 verification failure (a probe found a violation or a solver failed),
// 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// main() adapter: forwards argv[1..] to the stream overload on stdout/stderr.
int run(int argc, const char* const* argv);

}  // namespace hrl::cli
