#include "pdm/point_scatter.hpp"

#include <cmath>
#include <string>

#include "pdm/error.hpp"

namespace pdm {

namespace {

void require_positive_k(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw Error(Errc::NonPositiveWavenumber, "wavenumber must be positive, got " + std::to_string(k));
  }
}

}  // namespace

ScatteringAmplitudes ScatteringAmplitudes::from(Complex r, Complex t, std::optional<double> k) {
  ScatteringAmplitudes s;
  s.r = r;
  s.t = t;
  s.k = k;
  s.prob_r = std::norm(r);
  s.prob_t = std::norm(t);
  s.unitarity_defect = s.prob_r + s.prob_t - 1.0;
  return s;
}

ScatteringAmplitudes amplitudes_pure_dprime(double u0) {
  const double u2 = u0 * u0;
  const double denom = 4.0 + u2;
  return ScatteringAmplitudes::from(Complex(-4.0 * u0 / denom, 0.0),
                                    Complex((4.0 - u2) / denom, 0.0), std::nullopt);
}

ScatteringAmplitudes mu_sweep_amplitudes(double mu) {
  if (!(mu > -1.0)) {
    throw Error(Errc::MassNotPositive, "mu must exceed -1, got " + std::to_string(mu));
  }
  const double s = 1.0 + 0.5 * mu;
  const double s2 = s * s;
  const double s4 = s2 * s2;
  const double mu2 = mu * mu;
  const double denom = 4.0 * s4 + mu2;
  return ScatteringAmplitudes::from(Complex(-4.0 * mu * s2 / denom, 0.0),
                                    Complex((4.0 * s4 - mu2) / denom, 0.0), std::nullopt);
}

ScatteringAmplitudes amplitudes_with_delta(double a, double u0, double k) {
  require_positive_k(k);
  if (a == 0.0) {
    auto s = amplitudes_pure_dprime(u0);
    s.k = k;
    return s;
  }
  const Complex ik(0.0, k);
  const double u2 = u0 * u0;
  const Complex denom = 4.0 * a + ik * (4.0 + u2);
  return ScatteringAmplitudes::from(-4.0 * (a + ik * u0) / denom, ik * (4.0 - u2) / denom, k);
}

ScatteringAmplitudes amplitudes_matching_oracle(double a, double b, double k) {
  require_positive_k(k);
  if (std::abs(std::abs(b) - 1.0) < 1e-12) {
    throw Error(Errc::DegenerateCoupling,
                "|b| = 1 makes the matching singular; use the closed form for u0 = +-2");
  }
  const double theta = (1.0 + b) / (1.0 - b);
  const double c = 2.0 * a / (1.0 - b * b);
  const Complex ik(0.0, k);

  // phi(0-) = 1 + R, phi'(0-) = ik(1 - R), phi(0+) = T, phi'(0+) = ik T.
  //   theta R - T = -theta
  //   (ik/theta + c) R + ik T = ik/theta - c
  const Complex m11 = theta;
  const Complex m12 = -1.0;
  const Complex m21 = ik / theta + c;
  const Complex m22 = ik;
  const Complex r1 = -theta;
  const Complex r2 = ik / theta - c;

  const Complex det = m11 * m22 - m12 * m21;
  const Complex r = (r1 * m22 - m12 * r2) / det;
  const Complex t = (m11 * r2 - m21 * r1) / det;
  return ScatteringAmplitudes::from(r, t, k);
}

std::optional<double> bound_state(double a, double u0) {
  if (!(a > 0.0)) {
    return std::nullopt;
  }
  // 4a + ik(4 + u0^2) = 0 at k = i kappa, kappa = 4a/(4 + u0^2); E = -kappa^2/2.
  const double denom = 4.0 + u0 * u0;
  return -8.0 * a * a / (denom * denom);
}

std::pair<double, double> small_mu_expansion_check(double mu) {
  if (!(mu > 0.0 && mu < 1.0)) {
    throw Error(Errc::OutOfExpansionRange, "expansion check needs 0 < mu < 1, got " + std::to_string(mu));
  }
  const auto s = mu_sweep_amplitudes(mu);
  const double mu2 = mu * mu;
  return {std::abs(s.prob_r - mu2), std::abs(s.prob_t - (1.0 - mu2))};
}

}  // namespace pdm
