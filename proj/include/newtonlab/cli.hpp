#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace newtonlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitInternal = 2;

// Runs one command line (argv without the program name). Reports go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace newtonlab::cli
