#ifndef PDM_POINT_SCATTER_HPP
#define PDM_POINT_SCATTER_HPP

// Scattering off V(x) = -a delta(x) + b delta'(x) at unit mass, E = k^2/2.
// Plane-wave convention: psi = e^{ikx} + R e^{-ikx} for x < 0, T e^{ikx} for x > 0.
// Closed forms are written in terms of u0 = U(0) = 2b.

#include <complex>
#include <optional>
#include <utility>

namespace pdm {

using Complex = std::complex<double>;

struct ScatteringAmplitudes {
  Complex r;
  Complex t;  ///< flux-normalized, so prob_t = |t|^2
  std::optional<double> k;  ///< empty for k-independent results
  double prob_r = 0.0;
  double prob_t = 0.0;
  double unitarity_defect = 0.0;

  static ScatteringAmplitudes from(Complex r, Complex t, std::optional<double> k);
};

/// R = -4u0/(4+u0^2), T = (4-u0^2)/(4+u0^2).
ScatteringAmplitudes amplitudes_pure_dprime(double u0);

/// Closed form in mu for m = 1 + mu h(x). Throws Error(MassNotPositive) for mu <= -1.
ScatteringAmplitudes mu_sweep_amplitudes(double mu);

/// R = -4(a + ik u0)/(4a + ik(4+u0^2)), T = ik(4-u0^2)/(4a + ik(4+u0^2)).
/// Throws Error(NonPositiveWavenumber).
ScatteringAmplitudes amplitudes_with_delta(double a, double u0, double k);

/// Solves the matching conditions
///   phi(0+) = theta phi(0-),
///   phi'(0+) = phi'(0-)/theta - 2a/(1-b^2) phi(0-),   theta = (1+b)/(1-b),
/// as a 2x2 linear system. Throws Error(DegenerateCoupling) for |b| = 1 and
/// Error(NonPositiveWavenumber) for k <= 0.
ScatteringAmplitudes amplitudes_matching_oracle(double a, double b, double k);

/// Bound-state energy from the pole of T on the positive imaginary k axis;
/// empty unless a > 0.
std::optional<double> bound_state(double a, double u0);

/// (||R|^2 - mu^2|, ||T|^2 - (1 - mu^2)|). Throws Error(OutOfExpansionRange)
/// unless 0 < mu < 1.
std::pair<double, double> small_mu_expansion_check(double mu);

}  // namespace pdm

#endif  // PDM_POINT_SCATTER_HPP
