#ifndef PDM_NUMERIC_HPP
#define PDM_NUMERIC_HPP

/**
 * @file numeric.hpp
 * @brief Numerical oracles for the closed forms.
 *
 * - an x-space transfer-matrix solver for -1/2 d(1/m)d psi + V~ psi = E psi
 *   on piecewise-constant segments, matching psi and psi'/m at interfaces;
 * - a q-space solver for constant-mass scattering off Gaussian-regularized
 *   delta and delta' shapes;
 * - finite-difference checks that the von Roos operator equals the kinetic
 *   form plus V~, and that the x-space and q-space problems scatter alike.
 */

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "pdm/mass_model.hpp"
#include "pdm/ordering.hpp"
#include "pdm/point_scatter.hpp"

namespace pdm {

struct SolverConfig {
  /// L; when empty each solver picks a default from the profile width.
  std::optional<double> domain_half_width;
  int segment_count = 4000;
  double energy = 1.0;
  double tolerance = 1e-8;
  /// How many times the solvers may double segment_count while the N -> 2N
  /// change in |R|^2 still exceeds tolerance. 0 checks segment_count only.
  int max_refinements = 5;

  /// 20 max(epsilon, 1) unless set.
  double half_width_for(double epsilon) const;
  /// Throws Error(InvalidConfig) when L <= 0, N < 2, tolerance <= 0 or
  /// max_refinements < 0.
  void validate() const;
};

/// A slab of constant mass and potential.
struct Segment {
  double width = 0.0;
  double mass = 1.0;
  double potential = 0.0;
};

/// Propagator of (psi, psi'/m) across one or more segments. Entries are real
/// because E, m and V are. The true matrix is exp(log_scale) times `entries`.
struct TransferMatrix {
  std::array<double, 4> entries{1.0, 0.0, 0.0, 1.0};  // row-major
  double log_scale = 0.0;

  double operator()(int row, int col) const { return entries[2 * row + col]; }
  /// Determinant of the true matrix, which is 1 for any stack of segments.
  /// Only meaningful when log_scale is small.
  double determinant() const;
};

TransferMatrix segment_propagator(const Segment& segment, double energy);

/// Product of segment propagators, leftmost segment applied first. Entries are
/// renormalized whenever they exceed e^50.
TransferMatrix propagate(std::span<const Segment> segments, double energy);

/// Asymptotic medium on either side of a segment stack (potential 0).
struct Medium {
  double mass = 1.0;
  double position = 0.0;  ///< x of the boundary between medium and stack
};

/// R and flux-normalized T for a wave incident from the left. Phases refer to x = 0.
/// Throws Error(EnergyBelowThreshold) for E <= 0.
ScatteringAmplitudes scatter_segments(std::span<const Segment> segments, Medium left, Medium right,
                                      double energy);

/// Piecewise-constant slicing of [-L, L] into `count` segments sampled at their
/// midpoints; V~ is included for smooth profiles and omitted for jump profiles.
std::vector<Segment> pdm_segments(const MassProfile& profile, const AmbiguityCoefficients& coeffs,
                                  double half_width, int count);

/// x-space scattering for the von Roos equation. Solves at N and 2N segments,
/// doubling N up to cfg.max_refinements times until |R|^2 moves by at most
/// cfg.tolerance, and returns the finer result. Throws Error(NonConvergent) when
/// that never happens or flux is not conserved to cfg.tolerance.
ScatteringAmplitudes scatter_pdm_xspace(const MassProfile& profile, const SolverConfig& cfg,
                                        const OrderingParams& ordering = preset("BenDanielDuke"));

/// V(q) = -a delta_eps(q) + b delta_eps'(q) with Gaussian delta_eps.
struct RegularizedPointShape {
  double a = 0.0;
  double b = 0.0;
  double epsilon = 0.1;
};

double gaussian_delta(double epsilon, double q);
double gaussian_delta_prime(double epsilon, double q);

/// Constant-mass scattering off a regularized point shape at wavenumber k.
/// Default half-width is 10 epsilon. Same convergence contract as the x-space solver.
ScatteringAmplitudes scatter_qspace_regularized(const RegularizedPointShape& shape,
                                                const SolverConfig& cfg, double k);

/// Max residual |H_vonRoos psi - (-1/2 d(1/m)d + V~) psi| over the grid and a
/// fixed family of Gaussian wave packets. Uses cfg.segment_count intervals on
/// [-L, L]. Throws Error(NotSmooth) for jump profiles.
double operator_equivalence_check(const MassProfile& profile, const OrderingParams& params,
                                  const SolverConfig& cfg);
/// Same, with explicit (g1, g2) used for V~ (G1, G2 ignored).
double operator_equivalence_check(const MassProfile& profile, const OrderingParams& params,
                                  const AmbiguityCoefficients& tilde_coeffs,
                                  const SolverConfig& cfg);

struct PctComparison {
  double xspace_prob_t = 0.0;  ///< Richardson-extrapolated over N, 2N
  double qspace_prob_t = 0.0;
  double difference = 0.0;
};

/// Transmission through the x-space equation versus the q-space equation with
/// V_eff = G1 m''/m^2 - G2 m'^2/m^3 on the image grid q(x_i).
PctComparison pct_transmission_check(const MassProfile& profile, const OrderingParams& params,
                                     const SolverConfig& cfg);
/// Same, with explicit (G1, G2) for the q-space side.
PctComparison pct_transmission_check(const MassProfile& profile, const OrderingParams& params,
                                     const AmbiguityCoefficients& effective_coeffs,
                                     const SolverConfig& cfg);

}  // namespace pdm

#endif  // PDM_NUMERIC_HPP
