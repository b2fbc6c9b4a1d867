#ifndef PDM_MASS_MODEL_HPP
#define PDM_MASS_MODEL_HPP

/**
 * @file mass_model.hpp
 * @brief Position-dependent mass profiles with a jump at the origin.
 *
 * Units: hbar = m0 = 1, masses are dimensionless multiples of m0.
 *
 * A jump profile is written m(x) = f(h(x)) with h the Heaviside step
 * (h(0) = 1/2) and f the quadratic through (0, m1), (1/2, m2), (1, m3).
 * For the single-parameter family m = 1 + mu h(x) the quadratic degenerates
 * to the straight line 1 + mu h. Smooth variants replace h with a
 * regularized step h_eps and keep the same f.
 */

#include <variant>

namespace pdm {

struct HeavisideMu {
  double mu = 0.0;
};

struct HeavisideGeneral {
  double m1 = 1.0;  ///< mass for x < 0
  double m2 = 1.0;  ///< mass at x = 0
  double m3 = 1.0;  ///< mass for x > 0
};

enum class Regularizer { Tanh, LinearRamp, ErrorFunction };

struct SmoothRegularized {
  HeavisideGeneral base;
  Regularizer regularizer = Regularizer::Tanh;
  double epsilon = 1.0;
};

/// f(h) = c0 + c1 h + c2 h^2, the step-to-mass map.
struct QuadraticInterpolant {
  double c0 = 1.0;
  double c1 = 0.0;
  double c2 = 0.0;

  static QuadraticInterpolant through(const HeavisideGeneral& m);

  double value(double h) const { return c0 + h * (c1 + h * c2); }
  double slope(double h) const { return c1 + 2.0 * c2 * h; }
  double curvature() const { return 2.0 * c2; }
  /// Smallest value of f on [0, 1].
  double min_on_unit_interval() const;
};

/// m, dm/dx, d2m/dx2 at a point.
struct MassDerivatives {
  double value = 1.0;
  double first = 0.0;
  double second = 0.0;
};

class MassProfile {
 public:
  using Kind = std::variant<HeavisideMu, HeavisideGeneral, SmoothRegularized>;

  /// Throws Error(InvalidProfile) unless mu > -1.
  static MassProfile heaviside_mu(double mu);
  /// Throws Error(InvalidProfile) unless all three masses are positive.
  static MassProfile heaviside(double m1, double m2, double m3);
  /// Throws Error(NonPositiveEpsilon) or Error(InvalidProfile).
  static MassProfile smooth(const HeavisideGeneral& base, Regularizer regularizer,
                            double epsilon);

  const Kind& kind() const { return kind_; }
  bool is_jump() const { return !std::holds_alternative<SmoothRegularized>(kind_); }

  /// Three-value form of the profile (the base, for smooth kinds).
  HeavisideGeneral jump_values() const;
  QuadraticInterpolant interpolant() const { return QuadraticInterpolant::through(jump_values()); }

  double left_mass() const { return jump_values().m1; }
  double right_mass() const { return jump_values().m3; }

  /// True for HeavisideMu with mu <= 0: valid, but outside mu > 0.
  bool outside_nominal_range() const;

  /// Width of the regularization, 0 for jump kinds.
  double epsilon() const;

 private:
  explicit MassProfile(Kind kind) : kind_(kind) {}

  Kind kind_;
};

/// m(x). Jump kinds give m1 / m2 / m3 for x < 0 / x == 0 / x > 0.
double mass_at(const MassProfile& profile, double x);

/// Regularized step h_eps(x) in [0, 1] with h_eps(0) = 1/2.
double regularized_step(Regularizer regularizer, double epsilon, double x);

/// m and its first two x-derivatives. Throws Error(NotSmooth) for jump kinds.
/// Tanh and ErrorFunction use closed forms; LinearRamp uses Richardson-extrapolated
/// central differences.
MassDerivatives mass_derivatives(const MassProfile& profile, double x);

/// q(x) = integral_0^x sqrt(m(t)) dt.
double pct_coordinate(const MassProfile& profile, double x);

/// U(0) = f'(1/2) / f(1/2)^2 = (m3 - m1) / m2^2. Throws Error(NotAJumpProfile).
double jump_coupling(const MassProfile& profile);

/// Smooth version of a jump profile. Throws Error(NonPositiveEpsilon) or
/// Error(NotAJumpProfile) when given an already smooth profile.
MassProfile regularize(const MassProfile& profile, Regularizer regularizer, double epsilon);

}  // namespace pdm

#endif  // PDM_MASS_MODEL_HPP
