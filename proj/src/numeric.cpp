#include "pdm/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "detail/simpson.hpp"
#include "pdm/error.hpp"
#include "pdm/pct.hpp"

namespace pdm {

namespace {

constexpr double kRescaleExponent = 50.0;
constexpr double kSmallPhase = 1e-8;

void renormalize(TransferMatrix& m) {
  double big = 0.0;
  for (double e : m.entries) {
    big = std::max(big, std::abs(e));
  }
  if (big > std::exp(kRescaleExponent)) {
    for (double& e : m.entries) {
      e /= big;
    }
    m.log_scale += std::log(big);
  }
}

// lhs * rhs
TransferMatrix multiply(const TransferMatrix& lhs, const TransferMatrix& rhs) {
  TransferMatrix out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.entries[2 * i + j] = lhs(i, 0) * rhs(0, j) + lhs(i, 1) * rhs(1, j);
    }
  }
  out.log_scale = lhs.log_scale + rhs.log_scale;
  renormalize(out);
  return out;
}

// Propagator over a signed width, so width < 0 gives the inverse.
TransferMatrix signed_propagator(double width, double mass, double potential, double energy) {
  const double kappa2 = 2.0 * mass * (energy - potential);
  const double phase2 = kappa2 * width * width;
  double c = 1.0;
  double sin_over_k = width;    // sin(kd)/k
  double k_sin = kappa2 * width;  // k sin(kd)
  double log_scale = 0.0;
  if (std::abs(phase2) < kSmallPhase) {
    c = 1.0 - 0.5 * phase2;
    sin_over_k = width * (1.0 - phase2 / 6.0);
    k_sin = kappa2 * sin_over_k;
  } else if (kappa2 > 0.0) {
    const double k = std::sqrt(kappa2);
    c = std::cos(k * width);
    sin_over_k = std::sin(k * width) / k;
    k_sin = k * std::sin(k * width);
  } else {
    const double g = std::sqrt(-kappa2);
    const double gd = g * std::abs(width);
    const double sign = width < 0.0 ? -1.0 : 1.0;
    double ch = 0.0;
    double sh = 0.0;
    if (gd > kRescaleExponent) {
      // cosh and sinh divided by e^{gd}
      const double tail = std::exp(-2.0 * gd);
      ch = 0.5 * (1.0 + tail);
      sh = sign * 0.5 * (1.0 - tail);
      log_scale = gd;
    } else {
      ch = std::cosh(gd);
      sh = sign * std::sinh(gd);
    }
    c = ch;
    sin_over_k = sh / g;
    k_sin = -g * sh;
  }
  TransferMatrix m;
  m.entries = {c, mass * sin_over_k, -k_sin / mass, c};
  m.log_scale = log_scale;
  return m;
}

std::vector<double> uniform_nodes(double half_width, int count) {
  std::vector<double> x(static_cast<std::size_t>(count) + 1);
  const double h = 2.0 * half_width / count;
  for (int i = 0; i <= count; ++i) {
    x[static_cast<std::size_t>(i)] = -half_width + h * i;
  }
  // exact zero node for even counts keeps jump profiles sharp
  if (count % 2 == 0) {
    x[static_cast<std::size_t>(count / 2)] = 0.0;
  }
  return x;
}

double default_xspace_half_width(const MassProfile& profile, const SolverConfig& cfg) {
  return cfg.half_width_for(profile.epsilon());
}

void check_flux(const ScatteringAmplitudes& s, double tolerance) {
  if (!(std::abs(s.unitarity_defect) < tolerance)) {
    throw Error(Errc::NonConvergent,
                "flux not conserved: unitarity defect " + std::to_string(s.unitarity_defect));
  }
}

// Doubles the segment count until |R|^2 settles; returns the finer solve.
template <typename Solve>
ScatteringAmplitudes refine(const Solve& solve, int count, const SolverConfig& cfg) {
  auto coarse = solve(count);
  double change = 0.0;
  for (int round = 0; round <= cfg.max_refinements; ++round) {
    auto fine = solve(2 * count);
    change = std::abs(fine.prob_r - coarse.prob_r);
    if (change <= cfg.tolerance) {
      check_flux(fine, cfg.tolerance);
      return fine;
    }
    coarse = fine;
    count *= 2;
  }
  throw Error(Errc::NonConvergent, "doubling " + std::to_string(count) +
                                       " segments still changed |R|^2 by " + std::to_string(change));
}

int even_count(const MassProfile& profile, int count) {
  return profile.is_jump() && count % 2 != 0 ? count + 1 : count;
}

}  // namespace

double SolverConfig::half_width_for(double epsilon) const {
  return domain_half_width.value_or(20.0 * std::max(epsilon, 1.0));
}

void SolverConfig::validate() const {
  if (domain_half_width && !(*domain_half_width > 0.0)) {
    throw Error(Errc::InvalidConfig, "domain half-width must be positive");
  }
  if (segment_count < 2) {
    throw Error(Errc::InvalidConfig, "segment count must be at least 2");
  }
  if (!(tolerance > 0.0)) {
    throw Error(Errc::InvalidConfig, "tolerance must be positive");
  }
  if (max_refinements < 0) {
    throw Error(Errc::InvalidConfig, "max_refinements must be non-negative");
  }
}

double TransferMatrix::determinant() const {
  const double scale = std::exp(log_scale);
  return ((*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0)) * scale * scale;
}

TransferMatrix segment_propagator(const Segment& segment, double energy) {
  return signed_propagator(segment.width, segment.mass, segment.potential, energy);
}

TransferMatrix propagate(std::span<const Segment> segments, double energy) {
  TransferMatrix total;
  for (const auto& s : segments) {
    total = multiply(segment_propagator(s, energy), total);
  }
  return total;
}

ScatteringAmplitudes scatter_segments(std::span<const Segment> segments, Medium left, Medium right,
                                      double energy) {
  if (!(energy > 0.0)) {
    throw Error(Errc::EnergyBelowThreshold,
                "energy must lie above both asymptotic band edges (0), got " + std::to_string(energy));
  }
  const double k_left = std::sqrt(2.0 * left.mass * energy);
  const double k_right = std::sqrt(2.0 * right.mass * energy);
  const Complex i(0.0, 1.0);
  const Complex s_left = i * k_left / left.mass;
  const Complex s_right = i * k_right / right.mass;

  // Start from the purely transmitted wave (T = 1) at the right edge and walk
  // back to the left. The growing direction of evanescent slabs is then the
  // physical one, so no cancellation occurs.
  const Complex at_right = std::exp(i * k_right * right.position);
  std::array<Complex, 2> v{at_right, s_right * at_right};
  double log_scale = 0.0;
  for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
    const auto inv = signed_propagator(-it->width, it->mass, it->potential, energy);
    v = {inv(0, 0) * v[0] + inv(0, 1) * v[1], inv(1, 0) * v[0] + inv(1, 1) * v[1]};
    log_scale += inv.log_scale;
    const double big = std::max(std::abs(v[0]), std::abs(v[1]));
    if (big > std::exp(kRescaleExponent)) {
      v[0] /= big;
      v[1] /= big;
      log_scale += std::log(big);
    }
  }

  // v = A e^{ik xl} (1, s) + B e^{-ik xl} (1, -s) at the left edge
  const Complex incoming = 0.5 * (v[0] + v[1] / s_left) * std::exp(-i * k_left * left.position);
  const Complex outgoing = 0.5 * (v[0] - v[1] / s_left) * std::exp(i * k_left * left.position);
  const Complex r = outgoing / incoming;
  const double flux_ratio = (k_right / right.mass) / (k_left / left.mass);
  const Complex t = std::exp(-log_scale) / incoming * std::sqrt(flux_ratio);
  return ScatteringAmplitudes::from(r, t, k_left);
}

std::vector<Segment> pdm_segments(const MassProfile& profile, const AmbiguityCoefficients& coeffs,
                                  double half_width, int count) {
  const auto x = uniform_nodes(half_width, count);
  std::vector<Segment> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::size_t j = 0; j + 1 < x.size(); ++j) {
    const double mid = 0.5 * (x[j] + x[j + 1]);
    const double v = profile.is_jump() ? 0.0 : tilde_potential(profile, coeffs, mid);
    out.push_back(Segment{x[j + 1] - x[j], mass_at(profile, mid), v});
  }
  return out;
}

namespace {

ScatteringAmplitudes solve_xspace(const MassProfile& profile, const AmbiguityCoefficients& coeffs,
                                  double half_width, int count, double energy) {
  const auto segments = pdm_segments(profile, coeffs, half_width, count);
  return scatter_segments(segments, Medium{profile.left_mass(), -half_width},
                          Medium{profile.right_mass(), half_width}, energy);
}

std::vector<Segment> qspace_segments(const RegularizedPointShape& shape, double half_width,
                                     int count) {
  const auto x = uniform_nodes(half_width, count);
  std::vector<Segment> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::size_t j = 0; j + 1 < x.size(); ++j) {
    const double mid = 0.5 * (x[j] + x[j + 1]);
    const double v = -shape.a * gaussian_delta(shape.epsilon, mid) +
                     shape.b * gaussian_delta_prime(shape.epsilon, mid);
    out.push_back(Segment{x[j + 1] - x[j], 1.0, v});
  }
  return out;
}

ScatteringAmplitudes solve_qspace(const RegularizedPointShape& shape, double half_width, int count,
                                  double energy) {
  const auto segments = qspace_segments(shape, half_width, count);
  return scatter_segments(segments, Medium{1.0, -half_width}, Medium{1.0, half_width}, energy);
}

// Segments of the q-space image of the x grid, carrying V_eff.
ScatteringAmplitudes solve_pct_image(const MassProfile& profile,
                                     const AmbiguityCoefficients& effective_coeffs,
                                     double half_width, int count, double energy) {
  const auto x = uniform_nodes(half_width, count);
  auto root_mass = [&](double t) { return std::sqrt(mass_at(profile, t)); };
  const double h = 2.0 * half_width / count;
  std::vector<Segment> segments;
  segments.reserve(static_cast<std::size_t>(count));
  double q = 0.0;
  for (std::size_t j = 0; j + 1 < x.size(); ++j) {
    const double width = detail::adaptive_simpson(root_mass, x[j], x[j + 1], 1e-13 * h);
    const double mid = 0.5 * (x[j] + x[j + 1]);
    const auto d = mass_derivatives(profile, mid);
    const double m = d.value;
    const double v = effective_coeffs.G1 * d.second / (m * m) -
                     effective_coeffs.G2 * d.first * d.first / (m * m * m);
    segments.push_back(Segment{width, 1.0, v});
    q += width;
  }
  // only probabilities are compared, so the image origin is immaterial
  const double q_left = -std::sqrt(profile.left_mass()) * half_width;
  return scatter_segments(segments, Medium{1.0, q_left}, Medium{1.0, q_left + q}, energy);
}

}  // namespace

ScatteringAmplitudes scatter_pdm_xspace(const MassProfile& profile, const SolverConfig& cfg,
                                        const OrderingParams& ordering) {
  cfg.validate();
  const auto coeffs = coefficients(ordering);
  const double half_width = default_xspace_half_width(profile, cfg);
  auto solve = [&](int n) { return solve_xspace(profile, coeffs, half_width, n, cfg.energy); };
  return refine(solve, even_count(profile, cfg.segment_count), cfg);
}

double gaussian_delta(double epsilon, double q) {
  const double s = q / epsilon;
  return std::exp(-0.5 * s * s) / (epsilon * std::sqrt(2.0 * std::numbers::pi));
}

double gaussian_delta_prime(double epsilon, double q) {
  return -q / (epsilon * epsilon) * gaussian_delta(epsilon, q);
}

ScatteringAmplitudes scatter_qspace_regularized(const RegularizedPointShape& shape,
                                                const SolverConfig& cfg, double k) {
  cfg.validate();
  if (!(k > 0.0)) {
    throw Error(Errc::NonPositiveWavenumber, "wavenumber must be positive");
  }
  if (!(shape.epsilon > 0.0)) {
    throw Error(Errc::NonPositiveEpsilon, "regularization width must be positive");
  }
  const double half_width = cfg.domain_half_width.value_or(10.0 * shape.epsilon);
  const double energy = 0.5 * k * k;
  auto solve = [&](int n) { return solve_qspace(shape, half_width, n, energy); };
  auto out = refine(solve, cfg.segment_count, cfg);
  out.k = k;
  return out;
}

double operator_equivalence_check(const MassProfile& profile, const OrderingParams& params,
                                  const SolverConfig& cfg) {
  return operator_equivalence_check(profile, params, coefficients(params), cfg);
}

double operator_equivalence_check(const MassProfile& profile, const OrderingParams& params,
                                  const AmbiguityCoefficients& tilde_coeffs,
                                  const SolverConfig& cfg) {
  if (profile.is_jump()) {
    throw Error(Errc::NotSmooth, "operator check needs a smooth profile");
  }
  cfg.validate();
  const double half_width = cfg.half_width_for(profile.epsilon());
  const int n = cfg.segment_count;
  const double h = 2.0 * half_width / n;
  const auto nodes = uniform_nodes(half_width, n);
  const auto count = nodes.size();

  const double alpha = params.alpha();
  const double beta = params.beta();
  const double gamma = params.gamma();

  std::vector<MassDerivatives> d(count);
  std::vector<double> m_alpha(count), m_gamma(count), m_beta_mid(count - 1), v_tilde(count);
  for (std::size_t i = 0; i < count; ++i) {
    d[i] = mass_derivatives(profile, nodes[i]);
    m_alpha[i] = std::pow(d[i].value, alpha);
    m_gamma[i] = std::pow(d[i].value, gamma);
    v_tilde[i] = tilde_potential(profile, tilde_coeffs, nodes[i]);
  }
  for (std::size_t i = 0; i + 1 < count; ++i) {
    m_beta_mid[i] = std::pow(mass_at(profile, 0.5 * (nodes[i] + nodes[i + 1])), beta);
  }

  // m^outer D( m^beta D( m^inner psi ) ) with half-step differences
  auto nested = [&](const std::vector<Complex>& psi, const std::vector<double>& outer,
                    const std::vector<double>& inner, std::size_t i) {
    const Complex right = m_beta_mid[i] * (inner[i + 1] * psi[i + 1] - inner[i] * psi[i]) / h;
    const Complex left = m_beta_mid[i - 1] * (inner[i] * psi[i] - inner[i - 1] * psi[i - 1]) / h;
    return outer[i] * (right - left) / h;
  };

  static constexpr std::array<double, 3> centers{-1.0, 0.0, 0.75};
  static constexpr std::array<double, 2> widths{0.6, 1.2};
  static constexpr std::array<double, 2> momenta{0.0, 2.0};

  double worst = 0.0;
  std::vector<Complex> psi(count);
  for (double c : centers) {
    for (double w : widths) {
      for (double p : momenta) {
        for (std::size_t i = 0; i < count; ++i) {
          const double s = (nodes[i] - c) / w;
          psi[i] = std::exp(-0.5 * s * s) * std::exp(Complex(0.0, p * nodes[i]));
        }
        for (std::size_t i = 1; i + 1 < count; ++i) {
          const Complex von_roos =
              -0.25 * (nested(psi, m_alpha, m_gamma, i) + nested(psi, m_gamma, m_alpha, i));
          const double m = d[i].value;
          const Complex second = (psi[i + 1] - 2.0 * psi[i] + psi[i - 1]) / (h * h);
          const Complex first = (psi[i + 1] - psi[i - 1]) / (2.0 * h);
          const Complex kinetic = -0.5 * (second / m - d[i].first / (m * m) * first);
          worst = std::max(worst, std::abs(von_roos - (kinetic + v_tilde[i] * psi[i])));
        }
      }
    }
  }
  return worst;
}

PctComparison pct_transmission_check(const MassProfile& profile, const OrderingParams& params,
                                     const SolverConfig& cfg) {
  return pct_transmission_check(profile, params, coefficients(params), cfg);
}

PctComparison pct_transmission_check(const MassProfile& profile, const OrderingParams& params,
                                     const AmbiguityCoefficients& effective_coeffs,
                                     const SolverConfig& cfg) {
  if (profile.is_jump()) {
    throw Error(Errc::NotSmooth, "PCT comparison needs a smooth profile");
  }
  cfg.validate();
  const auto tilde = coefficients(params);
  const double half_width = cfg.half_width_for(profile.epsilon());
  const int n = cfg.segment_count;
  auto richardson = [](double coarse, double fine) { return (4.0 * fine - coarse) / 3.0; };

  const double x_coarse = solve_xspace(profile, tilde, half_width, n, cfg.energy).prob_t;
  const double x_fine = solve_xspace(profile, tilde, half_width, 2 * n, cfg.energy).prob_t;
  const double q_coarse = solve_pct_image(profile, effective_coeffs, half_width, n, cfg.energy).prob_t;
  const double q_fine =
      solve_pct_image(profile, effective_coeffs, half_width, 2 * n, cfg.energy).prob_t;

  PctComparison out;
  out.xspace_prob_t = richardson(x_coarse, x_fine);
  out.qspace_prob_t = richardson(q_coarse, q_fine);
  out.difference = std::abs(out.xspace_prob_t - out.qspace_prob_t);
  return out;
}

}  // namespace pdm
