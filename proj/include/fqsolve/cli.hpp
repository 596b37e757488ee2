#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fqsolve {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitError = 1, kExitSat = 10, kExitUnsat = 20 };

/// Runs the command line `args` (without the program name). Regular output
/// goes to `out`, diagnostics to `err`; `in` is read for the path "-".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// The embedded oracle-equivalence suite behind `selftest`. Returns the
/// number of failed checks and reports each check on `out`.
int run_selftest(std::ostream& out, std::uint64_t seed);

}  // namespace fqsolve
