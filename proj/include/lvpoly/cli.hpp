#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lvpoly {

/// Runs one command; `args` excludes the program name. Returns the exit
/// status: 0 when every requested check passes, 1 when a check fails,
/// 2 for usage, parse, domain and cap errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lvpoly
