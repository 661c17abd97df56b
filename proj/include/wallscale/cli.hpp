#pragma once

namespace wallscale {

/// Subcommand front end (energy, build, relax, sweep, verify-bounds,
/// crossover).  Returns the process exit code: 0 success, 1 validation
/// failure, 2 I/O or parse error.
int run_cli(int argc, const char* const* argv);

}  // namespace wallscale
