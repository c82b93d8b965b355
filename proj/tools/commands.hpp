#pragma once

// The lifetrace command line, callable in-process for testing.
//
// `args` excludes the program name.
//
// Exit codes: 0 the claim holds or the answer was produced, 1 the claim fails
// (Garden of Eden, orphan, UNSAT, failed check), 2 usage, input or resource
// errors (including an exhausted search budget).

#include <ostream>
#include <string>
#include <vector>

namespace lifetrace::cli {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitError = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace lifetrace::cli
