#ifndef PDM_CLI_HPP
#define PDM_CLI_HPP

#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pdm::cli {

/// Exit codes of `run`.
enum ExitCode : int { kSuccess = 0, kIoError = 1, kUsageError = 2, kDomainError = 3 };

/// Keys accepted in config files (long-flag names without dashes).
std::span<const std::string_view> known_keys();

struct ConfigFragment {
  std::map<std::string, std::string> values;
  std::vector<std::string> warnings;
};

/// Parses `key = value` lines; `#` starts a comment. Unknown keys and malformed
/// lines throw ConfigSyntaxError; duplicates keep the last value and warn.
ConfigFragment parse_config(std::string_view text);
std::string render_config(const ConfigFragment& fragment);

/// Runs the command line (without the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pdm::cli

#endif  // PDM_CLI_HPP
