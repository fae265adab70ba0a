#pragma once

#include <iosfwd>

namespace qrmt::cli {

/// Parses argv and runs the chosen subcommand; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qrmt::cli
