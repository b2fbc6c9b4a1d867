#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

#include "pdm/error.hpp"
#include "pdm/mass_model.hpp"
#include "pdm/sweep.hpp"

namespace pdm {

std::vector<double> linear_grid(double from, double to, int steps) {
  std::vector<double> grid;
  if (steps <= 0) {
    return grid;
  }
  grid.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) {
    grid.push_back(from);
    return grid;
  }
  const double span = to - from;
  for (int i = 0; i < steps; ++i) {
    grid.push_back(i == steps - 1 ? to : from + span * i / (steps - 1));
  }
  return grid;
}

SweepRow analytic_mu_row(double mu, const AnalyticOptions& options) {
  const auto profile = MassProfile::heaviside_mu(mu);
  const double u0 = jump_coupling(profile);
  const auto point = reduce_point_interaction(profile, options.ordering, options.mode);
  const double u_eff = point.effective_u0();

  SweepRow row{mu, u0, {}};
  if (options.a != 0.0) {
    row.amplitudes = amplitudes_with_delta(options.a, u_eff, options.k.value_or(1.0));
    return row;
  }
  if (options.mode == CouplingMode::PaperFaithful && point.delta_prime_coupling == 0.5 * u0) {
    row.amplitudes = mu_sweep_amplitudes(mu);
  } else {
    row.amplitudes = amplitudes_pure_dprime(u_eff);
  }
  row.amplitudes.k = options.k;
  return row;
}

std::vector<SweepRow> sweep_mu(std::span<const double> mus, const AnalyticOptions& options) {
  for (double mu : mus) {
    MassProfile::heaviside_mu(mu);
  }
  if (options.a != 0.0 && options.k && !(*options.k > 0.0)) {
    throw Error(Errc::NonPositiveWavenumber, "wavenumber must be positive");
  }
  std::vector<SweepRow> rows;
  rows.reserve(mus.size());
  for (double mu : mus) {
    rows.push_back(analytic_mu_row(mu, options));
  }
  return rows;
}

std::vector<SweepRow> sweep_k(double u0, double a, std::span<const double> ks) {
  for (double k : ks) {
    if (!(k > 0.0)) {
      throw Error(Errc::NonPositiveWavenumber, "wavenumber must be positive");
    }
  }
  std::vector<SweepRow> rows;
  rows.reserve(ks.size());
  for (double k : ks) {
    rows.push_back({k, u0, amplitudes_with_delta(a, u0, k)});
  }
  return rows;
}

std::vector<SweepRow> sweep_epsilon(std::span<const double> epsilons,
                                    const EpsilonSweepOptions& options) {
  const auto jump = MassProfile::heaviside_mu(options.mu);
  const double u0 = jump_coupling(jump);
  options.config.validate();
  for (double eps : epsilons) {
    if (!(eps > 0.0)) {
      throw Error(Errc::NonPositiveEpsilon, "epsilon must be positive");
    }
  }
  if (!(options.config.energy > 0.0)) {
    throw Error(Errc::EnergyBelowThreshold, "energy must be positive");
  }

  std::vector<SweepRow> rows;
  rows.reserve(epsilons.size());
  for (double eps : epsilons) {
    SweepRow row{eps, u0, {}};
    if (options.solver == EpsilonSolver::XSpace) {
      const auto smooth = regularize(jump, Regularizer::Tanh, eps);
      row.amplitudes = scatter_pdm_xspace(smooth, options.config, options.ordering);
    } else {
      const RegularizedPointShape shape{options.a, 0.5 * u0, eps};
      row.amplitudes = scatter_qspace_regularized(shape, options.config,
                                                  std::sqrt(2.0 * options.config.energy));
    }
    rows.push_back(row);
  }
  return rows;
}

std::string_view sweep_csv_header(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::Mu:
      return "mu,u0,re_r,im_r,re_t,im_t,prob_r,prob_t,unitarity_defect";
    case SweepAxis::K:
      return "k,u0,re_r,im_r,re_t,im_t,prob_r,prob_t,unitarity_defect";
    case SweepAxis::Epsilon:
      return "epsilon,u0,re_r,im_r,re_t,im_t,prob_r,prob_t,unitarity_defect";
  }
  return "";
}

std::string format_number(double value) {
  if (value == 0.0) {
    value = 0.0;  // drop the sign of -0
  }
  std::array<char, 64> buf{};
  const auto [end, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
  if (ec != std::errc()) {
    return "nan";
  }
  return std::string(buf.data(), end);
}

std::string format_sweep_row(const SweepRow& row) {
  const auto& s = row.amplitudes;
  const std::array<double, 9> fields{row.parameter, row.u0,    s.r.real(),
                                     s.r.imag(),    s.t.real(), s.t.imag(),
                                     s.prob_r,      s.prob_t,   s.unitarity_defect};
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) {
      line += ',';
    }
    line += format_number(fields[i]);
  }
  return line;
}

std::string format_sweep_csv(SweepAxis axis, std::span<const SweepRow> rows) {
  std::string text(sweep_csv_header(axis));
  text += '\n';
  for (const auto& row : rows) {
    text += format_sweep_row(row);
    text += '\n';
  }
  return text;
}

void write_sweep_csv(SweepAxis axis, std::span<const SweepRow> rows,
                     const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw Error(Errc::IoFailure, "cannot open '" + path.string() + "': " +
                                     std::generic_category().message(errno));
  }
  const auto text = format_sweep_csv(axis, rows);
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  file.flush();
  if (!file) {
    throw Error(Errc::IoFailure, "write to '" + path.string() + "' failed");
  }
}

}  // namespace pdm
