#include <algorithm>
#include <array>
#include <string>

#include "pdm/cli.hpp"
#include "pdm/error.hpp"

namespace pdm::cli {

namespace {

constexpr std::array<std::string_view, 20> kKnownKeys{
    "a",    "alpha",    "beta",     "constraint", "energy", "epsilon",   "format",
    "from", "half-width", "k",      "mode",       "mu",     "ordering",  "out",
    "segments", "solver", "steps",  "to",         "tolerance", "u0",
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::span<const std::string_view> known_keys() { return kKnownKeys; }

ConfigFragment parse_config(std::string_view text) {
  ConfigFragment fragment;
  int line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    ++line_no;
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(start, end - start);
    start = end + 1;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigSyntaxError(line_no, "expected 'key = value'");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigSyntaxError(line_no, "empty key or value");
    }
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end()) {
      throw ConfigSyntaxError(line_no, "unknown key '" + std::string(key) + "'");
    }
    auto [it, inserted] = fragment.values.insert_or_assign(std::string(key), std::string(value));
    if (!inserted) {
      fragment.warnings.push_back("line " + std::to_string(line_no) + ": duplicate key '" +
                                  it->first + "', last value wins");
    }
  }
  return fragment;
}

std::string render_config(const ConfigFragment& fragment) {
  std::string text;
  for (const auto& [key, value] : fragment.values) {
    text += key + " = " + value + "\n";
  }
  return text;
}

}  // namespace pdm::cli
