#ifndef PDM_PCT_HPP
#define PDM_PCT_HPP

/**
 * @file pct.hpp
 * @brief Point canonical transformation psi = m^{1/4} phi(q), q' = sqrt(m).
 *
 * For smooth profiles the x-space potential and the q-space effective
 * potential are evaluated pointwise. For jump profiles the effective
 * potential is a distribution concentrated at x = 0 and is reduced to
 *   V(q) = -a delta(q) + b delta'(q) + c delta(q)^2,
 * where c != 0 means the ordering leaves a meaningless delta^2 term.
 */

#include <utility>

#include "pdm/mass_model.hpp"
#include "pdm/ordering.hpp"

namespace pdm {

/// How the delta' coupling is read off the reduced potential.
enum class CouplingMode {
  /// b = U(0)/2 whenever G1 != 0, and b = 0 for G1 = 0 (the free case).
  PaperFaithful,
  /// b = G1 U(0), the first term of the reduced potential as derived.
  Pipeline,
};

struct PointInteraction {
  double delta_strength = 0.0;        ///< a, in -a delta(x)
  double delta_prime_coupling = 0.0;  ///< b, in +b delta'(x)
  double delta_squared_coeff = 0.0;
  CouplingMode coupling_mode = CouplingMode::PaperFaithful;

  bool usable() const;
  /// The U(0)-style coupling u0 = 2b that the closed-form amplitudes take.
  double effective_u0() const { return 2.0 * delta_prime_coupling; }
};

/// Values of a function discontinuous at 0: the limits 0-, 0+ and the h(0) = 1/2 value.
struct PiecewiseBoundary {
  double left_limit = 0.0;
  double right_limit = 0.0;
  double mid_value = 0.0;
  /// Classical (delta-free) part of U'(0). Zero for piecewise-constant U.
  double slope_at_zero = 0.0;
};

/// g1 m''/m^2 - g2 m'^2/m^3. Throws Error(NotSmooth) for jump profiles.
double tilde_potential(const MassProfile& profile, const OrderingParams& params, double x);
double tilde_potential(const MassProfile& profile, const AmbiguityCoefficients& coeffs, double x);

/// G1 m''/m^2 - G2 m'^2/m^3, cross-checked against
/// V~ + 7 m'^2/(32 m^3) - m''/(8 m^2). Throws Error(NotSmooth).
double effective_potential_smooth(const MassProfile& profile, const OrderingParams& params,
                                  double x);

/// U(x) delta'(x) = U(0) delta'(x) - U'(0) delta(x).
/// Returns (coefficient of delta, coefficient of delta').
std::pair<double, double> apply_delta_identities(const PiecewiseBoundary& u);

/// U(x) = f'(h)/f(h)^2 around the origin for a jump profile.
PiecewiseBoundary coupling_boundary(const MassProfile& profile);

/// Collapses (jump profile, ordering) into a point interaction.
/// Throws Error(NotAJumpProfile) or Error(DeltaSquaredObstruction).
PointInteraction reduce_point_interaction(const MassProfile& profile, const OrderingParams& params,
                                          CouplingMode mode);

/// As above but returns the obstruction record instead of throwing.
PointInteraction reduce_point_interaction_unchecked(const MassProfile& profile,
                                                   const OrderingParams& params, CouplingMode mode);

}  // namespace pdm

#endif  // PDM_PCT_HPP
