#ifndef MI_TOOLS_CLI_HPP
#define MI_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mi::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kFailed = 2, kInvalid = 3 };

/// Runs one `mi` invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mi::cli

#endif
