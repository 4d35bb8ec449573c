// cli.hpp -- the thmon command-line driver, callable in-process for tests.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace thmon::cli {

// Exit codes: eq returns 0 for EQUAL and 1 for NOT-EQUAL; every error is 2.
inline constexpr int kExitError = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thmon::cli
