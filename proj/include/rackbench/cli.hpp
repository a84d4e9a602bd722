#pragma once

#include <iosfwd>

namespace rackbench {

/// Runs the rackbench command line. Exit codes: 0 success, 1 domain errors
/// (budget exhausted, caps, invalid algebra), 2 parse errors (bad flags, bad
/// files).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rackbench
