#ifndef DIOPH_TOOLS_CLI_HPP
#define DIOPH_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dioph::cli {

// Parses argv-style arguments (without the program name) and dispatches to
// the library. Exit codes: 0 ok, 2 validation error, 3 cost cap exceeded,
// 4 violated mathematical property. Errors go to err as "E:<Code>: message".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dioph::cli

#endif
