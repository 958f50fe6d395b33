#pragma once

/// @file cli.hpp
/// @brief Entry point of the command line tool, exposed as a function so
///        tests can drive it in-process and compare captured bytes.

#include <ostream>
#include <string>
#include <vector>

namespace snakechar::cli {

/// Parses args (without the program name), executes one verb and writes
/// results to out and diagnostics to err. Returns 0 on success or a
/// verified identity, 2 when a verification ran and failed, and 1 on
/// usage or resource errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace snakechar::cli
