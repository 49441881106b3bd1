#pragma once

#include <string>
#include <vector>

namespace wmlq {

// Entry point of the wmlq binary, callable in-process for tests.
// Exit codes: 0 success, 1 usage or verification failure, 2 infeasible
// (all-open mode), 3 budget rejection.
int cli_main(int argc, const char* const* argv);

// Same, for argument lists without the program name.
int cli_main(const std::vector<std::string>& args);

}  // namespace wmlq
