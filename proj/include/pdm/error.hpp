#ifndef PDM_ERROR_HPP
#define PDM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace pdm {

/// Failure categories raised by the library. The CLI maps each to an exit code.
enum class Errc {
  InvalidProfile,
  NotAJumpProfile,
  NonPositiveEpsilon,
  NotSmooth,
  DeltaSquaredObstruction,
  MassNotPositive,
  NonPositiveWavenumber,
  DegenerateCoupling,
  OutOfExpansionRange,
  EnergyBelowThreshold,
  NonConvergent,
  InvalidConfig,
  ConfigSyntax,
  IoFailure,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Config-file syntax error; carries the 1-based offending line.
class ConfigSyntaxError : public Error {
 public:
  ConfigSyntaxError(int line, const std::string& what)
      : Error(Errc::ConfigSyntax, "line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace pdm

#endif  // PDM_ERROR_HPP
