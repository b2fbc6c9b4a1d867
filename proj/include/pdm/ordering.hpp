#ifndef PDM_ORDERING_HPP
#define PDM_ORDERING_HPP

// von Roos ordering parameters (alpha, beta, gamma) of the kinetic operator
//   T = -1/4 [ m^a d m^b d m^g + m^g d m^b d m^a ],   a + b + g = -1,
// and the coefficient pairs that multiply m''/m^2 and m'^2/m^3 in the
// x-space potential (g1, g2) and in the PCT effective potential (G1, G2).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pdm {

class OrderingParams {
 public:
  /// gamma = -1 - alpha - beta.
  static OrderingParams from_alpha_beta(double alpha, double beta);
  /// Throws Error(InvalidConfig) if |alpha + beta + gamma + 1| > 1e-12.
  static OrderingParams from_triple(double alpha, double beta, double gamma);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }

 private:
  OrderingParams(double a, double b, double g) : alpha_(a), beta_(b), gamma_(g) {}

  double alpha_;
  double beta_;
  double gamma_;
};

struct AmbiguityCoefficients {
  double g1 = 0.0;
  double g2 = 0.0;
  double G1 = 0.0;
  double G2 = 0.0;

  /// Coefficient of the delta^2 term left after the distributional reduction.
  double delta_squared_factor() const { return 2.0 * G1 - G2; }
};

AmbiguityCoefficients coefficients(const OrderingParams& params);

struct NamedOrdering {
  std::string name;
  OrderingParams params;
};

/// GoraWilliams, BenDanielDuke, ZhuKroemer, LiKuhn, MM, MM1_paper, MM1_derived.
const std::vector<NamedOrdering>& presets();

std::optional<OrderingParams> find_preset(std::string_view name);
/// Like find_preset but throws Error(InvalidConfig) listing the known names.
OrderingParams preset(std::string_view name);

/// Symmetric (alpha == gamma) triples with G1 = G2 = 0.
std::vector<OrderingParams> solve_free_particle();

struct ConstrainedSolution {
  OrderingParams params;
  AmbiguityCoefficients coefficients;
};

/// Symmetric (alpha == gamma) triples with 2 G1 - G2 = 0, ascending in alpha.
std::vector<ConstrainedSolution> solve_delta2_free_symmetric();

}  // namespace pdm

#endif  // PDM_ORDERING_HPP
