#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace palcomb::cli {

enum ExitCode : int {
    ok = 0,
    usage_error = 1,
    unrealizable = 2,
    out_of_range = 3,
};

/// Runs one command line (args[0] is the program name). Results go to out,
/// diagnostics to err; stdin-style input is read from in.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace palcomb::cli
