#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace verlab::cli {

enum ExitCode : int { success = 0, verification_failure = 1, usage_error = 2 };

/// Entry point of the `verlab` tool; never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace verlab::cli
