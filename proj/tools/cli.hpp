#ifndef INDSHAPE_TOOLS_CLI_HPP
#define INDSHAPE_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace indshape::cli {

struct Entry {
  std::string name;
  std::string status;
  std::string detail;  // may span lines; rendered indented
};

/**
 * What one subcommand run reports. Exit codes: 0 all checks positive,
 * 1 some check negative, 2 nothing negative but something Unknown,
 * 3 usage error.
 */
struct RunReport {
  std::string command;
  std::vector<Entry> entries;
  std::vector<std::string> notes;
  int exit_code = 0;
};

std::string render_text(const RunReport& r);
std::string render_json(const RunReport& r);

/**
 * Full command-line surface. Parses argv, runs the subcommand, renders to
 * out (errors to err), returns the process exit code.
 */
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace indshape::cli

#endif
