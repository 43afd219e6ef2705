#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fatcode {

// Runs one CLI command against the given streams and returns the process
// exit code: 0 success, 1 computation error, 2 parse or usage error, 3 when
// a conjecture-mode checker reports a counterexample. Never throws.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace fatcode
