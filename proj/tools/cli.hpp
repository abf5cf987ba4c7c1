#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liefoliate::cli {

/// Runs one command. args excludes the program name. Data goes to out,
/// diagnostics to err. Returns 0 on success, 1 on domain errors (unknown
/// space, invalid Phi, failed verification) and 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liefoliate::cli
