#include "pdm/error.hpp"

namespace pdm {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidProfile: return "InvalidProfile";
    case Errc::NotAJumpProfile: return "NotAJumpProfile";
    case Errc::NonPositiveEpsilon: return "NonPositiveEpsilon";
    case Errc::NotSmooth: return "NotSmooth";
    case Errc::DeltaSquaredObstruction: return "DeltaSquaredObstruction";
    case Errc::MassNotPositive: return "MassNotPositive";
    case Errc::NonPositiveWavenumber: return "NonPositiveWavenumber";
    case Errc::DegenerateCoupling: return "DegenerateCoupling";
    case Errc::OutOfExpansionRange: return "OutOfExpansionRange";
    case Errc::EnergyBelowThreshold: return "EnergyBelowThreshold";
    case Errc::NonConvergent: return "NonConvergent";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::ConfigSyntax: return "ConfigSyntax";
    case Errc::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

}  // namespace pdm
