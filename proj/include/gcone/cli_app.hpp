/**
 * @file cli_app.hpp
 * @brief Command-line front end, callable in-process for testing.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gcone {

/// Runs the CLI against `args` (program name excluded, natural order),
/// writing regular output to `out` and diagnostics to `err`. Returns the
/// process exit code: 0 = success / all checks pass, 1 = verification
/// failure, 2 = usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace gcone
