/**
 * Command-line front end. Every command reads JSON input files and prints
 * one JSON report:
 *
 *   { "command", "arguments", "input_digest", "result", "provenance",
 *     "witnesses", "notes" }
 *
 * With --quiet only the "result" object is printed.
 */
#ifndef ACTDIM_CLI_HPP
#define ACTDIM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace actdim::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_input = 2;
inline constexpr int exit_usage = 64;

/// Run one command; `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string usage();

}  // namespace actdim::cli

#endif
