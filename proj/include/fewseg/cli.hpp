#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fewseg {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitInput = 2, kExitAlgorithm = 3 };

/// Entry point of the `fewseg` tool. `args` excludes the program name.
/// Results go to `out` unless --out names a file; diagnostics and the seed
/// echo go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fewseg
