#ifndef CORAD_CLI_HPP
#define CORAD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

// Command-line front end.  Subcommands: rate (one configuration),
// sweep (CSV/SVG over a geometry range), figure (preset curve
// families), validate (quadrature cross-check suite).
//
// Exit codes: 0 success, 1 usage or domain error (bad flags, unknown
// preset, unphysical configuration, failed validation), 2 output could
// not be written.

namespace corad::cli {

/// Runs the tool on the given arguments (without the program name),
/// writing results to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// main()-style adapter.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace corad::cli

#endif  // CORAD_CLI_HPP
