#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stw::cli {

// Executes one subcommand. Returns 0 on success, 1 on refusal/absent
// outcomes, 2 on errors. Reports go to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stw::cli
