#include "pdm/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pdm/error.hpp"

namespace pdm {

namespace {

constexpr double kConstraintTolerance = 1e-12;

OrderingParams symmetric(double alpha) {
  return OrderingParams::from_alpha_beta(alpha, -1.0 - 2.0 * alpha);
}

}  // namespace

OrderingParams OrderingParams::from_alpha_beta(double alpha, double beta) {
  return OrderingParams(alpha, beta, -1.0 - alpha - beta);
}

OrderingParams OrderingParams::from_triple(double alpha, double beta, double gamma) {
  if (std::abs(alpha + beta + gamma + 1.0) > kConstraintTolerance) {
    throw Error(Errc::InvalidConfig, "von Roos constraint alpha + beta + gamma = -1 violated");
  }
  return OrderingParams(alpha, beta, gamma);
}

AmbiguityCoefficients coefficients(const OrderingParams& p) {
  const double a = p.alpha();
  const double b = p.beta();
  const double cross = a * (a + b + 1.0);
  AmbiguityCoefficients c;
  c.g1 = 0.25 * (1.0 + b);
  c.g2 = 0.5 * (cross + b + 1.0);
  c.G1 = 0.125 * (1.0 + 2.0 * b);
  c.G2 = 0.5 * (cross + b + 9.0 / 16.0);
  return c;
}

const std::vector<NamedOrdering>& presets() {
  static const std::vector<NamedOrdering> table = {
      {"GoraWilliams", OrderingParams::from_triple(-1.0, 0.0, 0.0)},
      {"BenDanielDuke", OrderingParams::from_triple(0.0, -1.0, 0.0)},
      {"ZhuKroemer", OrderingParams::from_triple(-0.5, 0.0, -0.5)},
      {"LiKuhn", OrderingParams::from_triple(0.0, -0.5, -0.5)},
      {"MM", OrderingParams::from_triple(-0.25, -0.5, -0.25)},
      {"MM1_paper", OrderingParams::from_triple(-0.75, 0.5, -0.75)},
      {"MM1_derived", OrderingParams::from_triple(0.25, -1.5, 0.25)},
  };
  return table;
}

std::optional<OrderingParams> find_preset(std::string_view name) {
  const auto& table = presets();
  auto it = std::find_if(table.begin(), table.end(),
                         [name](const NamedOrdering& n) { return n.name == name; });
  if (it == table.end()) {
    return std::nullopt;
  }
  return it->params;
}

OrderingParams preset(std::string_view name) {
  if (auto found = find_preset(name)) {
    return *found;
  }
  std::string known;
  for (const auto& n : presets()) {
    known += (known.empty() ? "" : ", ") + n.name;
  }
  throw Error(Errc::InvalidConfig, "unknown ordering '" + std::string(name) + "' (known: " + known + ")");
}

std::vector<OrderingParams> solve_free_particle() {
  // G1 = (1 + 2 beta)/8 = 0 pins beta; alpha == gamma then fixes alpha.
  const double beta = -0.5;
  const double alpha = 0.5 * (-1.0 - beta);
  const auto candidate = OrderingParams::from_alpha_beta(alpha, beta);
  const auto c = coefficients(candidate);
  if (std::abs(c.G1) < kConstraintTolerance && std::abs(c.G2) < kConstraintTolerance) {
    return {candidate};
  }
  return {};
}

std::vector<ConstrainedSolution> solve_delta2_free_symmetric() {
  // On the line alpha == gamma, 2 G1 - G2 is a quadratic in alpha. Recover its
  // coefficients from three samples rather than hard-coding them.
  auto residual = [](double alpha) { return coefficients(symmetric(alpha)).delta_squared_factor(); };
  const double r0 = residual(0.0);
  const double rp = residual(1.0);
  const double rm = residual(-1.0);
  const double qa = 0.5 * (rp + rm) - r0;
  const double qb = 0.5 * (rp - rm);
  const double qc = r0;

  std::vector<double> roots;
  if (std::abs(qa) < kConstraintTolerance) {
    if (std::abs(qb) > kConstraintTolerance) {
      roots.push_back(-qc / qb);
    }
  } else {
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc >= 0.0) {
      const double s = std::sqrt(disc);
      roots.push_back((-qb - s) / (2.0 * qa));
      roots.push_back((-qb + s) / (2.0 * qa));
    }
  }
  std::sort(roots.begin(), roots.end());

  std::vector<ConstrainedSolution> out;
  for (double alpha : roots) {
    const auto p = symmetric(alpha);
    out.push_back({p, coefficients(p)});
  }
  return out;
}

}  // namespace pdm
