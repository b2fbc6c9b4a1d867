#ifndef PDM_SWEEP_HPP
#define PDM_SWEEP_HPP

// Parameter sweeps and their CSV rendering.

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pdm/numeric.hpp"
#include "pdm/ordering.hpp"
#include "pdm/pct.hpp"
#include "pdm/point_scatter.hpp"

namespace pdm {

enum class SweepAxis { Mu, K, Epsilon };

struct SweepRow {
  double parameter = 0.0;
  double u0 = 0.0;
  ScatteringAmplitudes amplitudes;
};

/// `steps` evenly spaced points from `from` to `to` inclusive; one point is `from`.
std::vector<double> linear_grid(double from, double to, int steps);

/// Settings shared by the analytic mu-scattering entry points.
struct AnalyticOptions {
  double a = 0.0;
  std::optional<double> k;
  CouplingMode mode = CouplingMode::PaperFaithful;
  OrderingParams ordering = preset("MM1_derived");
};

/// Jump coupling u0 of m = 1 + mu h(x), reduced through the ordering, then
/// scattered with the closed forms. In PaperFaithful mode with a = 0 the
/// mu-form of the amplitudes is used directly.
SweepRow analytic_mu_row(double mu, const AnalyticOptions& options);

/// Validates every grid point before computing any of them.
std::vector<SweepRow> sweep_mu(std::span<const double> mus, const AnalyticOptions& options);
std::vector<SweepRow> sweep_k(double u0, double a, std::span<const double> ks);

enum class EpsilonSolver { XSpace, QSpace };

struct EpsilonSweepOptions {
  double mu = 1.0;
  EpsilonSolver solver = EpsilonSolver::XSpace;
  SolverConfig config;
  OrderingParams ordering = preset("BenDanielDuke");
  double a = 0.0;  ///< q-space only
};

/// x-space: Tanh regularization of 1 + mu h(x) at energy config.energy.
/// q-space: Gaussian delta' of strength b = u0/2 at k = sqrt(2 energy).
std::vector<SweepRow> sweep_epsilon(std::span<const double> epsilons,
                                    const EpsilonSweepOptions& options);

std::string_view sweep_csv_header(SweepAxis axis);
/// %.17g-equivalent, locale independent.
std::string format_number(double value);
std::string format_sweep_row(const SweepRow& row);
std::string format_sweep_csv(SweepAxis axis, std::span<const SweepRow> rows);
/// Throws Error(IoFailure).
void write_sweep_csv(SweepAxis axis, std::span<const SweepRow> rows,
                     const std::filesystem::path& path);

}  // namespace pdm

#endif  // PDM_SWEEP_HPP
