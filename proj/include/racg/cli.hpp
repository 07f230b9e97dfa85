#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace racg {

// Runs one toolkit command. Exit codes: 0 = completed, 2 = a sought witness
// or violation was found (for scripting), 1 = error. Streams receive the
// emitted document and diagnostics respectively.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace racg
