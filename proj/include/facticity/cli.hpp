#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace facticity {

// Parses and executes one command.  args excludes the program name.  Data
// goes to `out` (or to files named by flags), diagnostics to `err`.
// Returns 0 on success, 1 on usage errors, 2 on runtime errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace facticity
