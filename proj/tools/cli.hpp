#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mixchrom::cli {

// Exit codes of the mixchrom tool.
enum ExitCode : int {
    ok = 0,
    verification_failed = 1,
    usage_error = 2, // also malformed graph files and out-of-domain arguments
    bound_exceeded = 3,
    internal_mismatch = 4,
};

// args excludes the program name. Payload goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mixchrom::cli
