#include "pdm/pct.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pdm/error.hpp"

namespace pdm {

namespace {

constexpr double kDeltaSquaredTolerance = 1e-12;
constexpr double kSelfCheckTolerance = 1e-10;

// Shifts from the x-space coefficients to the q-space ones: G1 = g1 - 1/8, G2 = g2 - 7/32.
constexpr double kCurvatureShift = 1.0 / 8.0;
constexpr double kSlopeShift = 7.0 / 32.0;

double combine(double curvature_coeff, double slope_coeff, const MassDerivatives& d) {
  const double m = d.value;
  return curvature_coeff * d.second / (m * m) - slope_coeff * d.first * d.first / (m * m * m);
}

}  // namespace

bool PointInteraction::usable() const {
  return std::abs(delta_squared_coeff) < kDeltaSquaredTolerance;
}

double tilde_potential(const MassProfile& profile, const AmbiguityCoefficients& coeffs, double x) {
  return combine(coeffs.g1, coeffs.g2, mass_derivatives(profile, x));
}

double tilde_potential(const MassProfile& profile, const OrderingParams& params, double x) {
  return tilde_potential(profile, coefficients(params), x);
}

double effective_potential_smooth(const MassProfile& profile, const OrderingParams& params,
                                  double x) {
  const auto c = coefficients(params);
  const auto d = mass_derivatives(profile, x);
  const double direct = combine(c.G1, c.G2, d);
  const double via_tilde = combine(c.g1, c.g2, d) - combine(kCurvatureShift, kSlopeShift, d);
  const double scale = std::max({1.0, std::abs(direct), std::abs(via_tilde)});
  if (std::abs(direct - via_tilde) > kSelfCheckTolerance * scale) {
    throw Error(Errc::NonConvergent, "effective potential routes disagree");
  }
  return direct;
}

std::pair<double, double> apply_delta_identities(const PiecewiseBoundary& u) {
  return {-u.slope_at_zero, u.mid_value};
}

PiecewiseBoundary coupling_boundary(const MassProfile& profile) {
  if (!profile.is_jump()) {
    throw Error(Errc::NotAJumpProfile, "coupling boundary needs a jump profile");
  }
  const auto f = profile.interpolant();
  auto u = [&f](double h) {
    const double v = f.value(h);
    return f.slope(h) / (v * v);
  };
  // U depends on x only through h, which is flat on either side of 0.
  return PiecewiseBoundary{u(0.0), u(1.0), u(0.5), 0.0};
}

PointInteraction reduce_point_interaction_unchecked(const MassProfile& profile,
                                                   const OrderingParams& params,
                                                   CouplingMode mode) {
  if (!profile.is_jump()) {
    throw Error(Errc::NotAJumpProfile, "point reduction needs a jump profile");
  }
  const auto c = coefficients(params);
  const auto f = profile.interpolant();
  const double f_mid = f.value(0.5);
  const double slope_mid = f.slope(0.5);

  // The -U'(0) delta piece of the identity only feeds the delta^2 bucket for a
  // quasi-free particle, so no delta strength is generated here.
  const double u0 = apply_delta_identities(coupling_boundary(profile)).second;

  PointInteraction out;
  out.coupling_mode = mode;
  out.delta_squared_coeff = c.delta_squared_factor() * slope_mid * slope_mid / (f_mid * f_mid * f_mid);
  switch (mode) {
    case CouplingMode::Pipeline:
      out.delta_prime_coupling = c.G1 * u0;
      break;
    case CouplingMode::PaperFaithful:
      out.delta_prime_coupling = std::abs(c.G1) < kDeltaSquaredTolerance ? 0.0 : 0.5 * u0;
      break;
  }
  return out;
}

PointInteraction reduce_point_interaction(const MassProfile& profile, const OrderingParams& params,
                                          CouplingMode mode) {
  auto out = reduce_point_interaction_unchecked(profile, params, mode);
  if (!out.usable()) {
    std::ostringstream msg;
    msg << "ordering (" << params.alpha() << ", " << params.beta() << ", " << params.gamma()
        << ") leaves a delta^2 term with coefficient " << out.delta_squared_coeff
        << " (2G1 - G2 = " << coefficients(params).delta_squared_factor() << ")";
    throw Error(Errc::DeltaSquaredObstruction, msg.str());
  }
  return out;
}

}  // namespace pdm
