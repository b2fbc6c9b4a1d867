#include "pdm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "pdm/error.hpp"
#include "pdm/mass_model.hpp"
#include "pdm/numeric.hpp"
#include "pdm/ordering.hpp"
#include "pdm/pct.hpp"
#include "pdm/point_scatter.hpp"
#include "pdm/sweep.hpp"

namespace pdm::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Human };

// Flag values from the command line, falling back to the config file.
class Settings {
 public:
  Settings(std::map<std::string, std::string> cli, ConfigFragment config)
      : cli_(std::move(cli)), config_(std::move(config)) {}

  std::optional<std::string> raw(const std::string& key) const {
    if (auto it = cli_.find(key); it != cli_.end()) return it->second;
    if (auto it = config_.values.find(key); it != config_.values.end()) return it->second;
    return std::nullopt;
  }

  std::optional<double> maybe_number(const std::string& key) const {
    const auto text = raw(key);
    if (!text) return std::nullopt;
    double value = 0.0;
    const char* first = text->data();
    const char* last = first + text->size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
      throw UsageError("--" + key + ": '" + *text + "' is not a finite number");
    }
    return value;
  }

  double number(const std::string& key) const {
    if (auto v = maybe_number(key)) return *v;
    throw UsageError("--" + key + " is required");
  }

  double number_or(const std::string& key, double fallback) const {
    return maybe_number(key).value_or(fallback);
  }

  std::optional<int> maybe_integer(const std::string& key) const {
    const auto text = raw(key);
    if (!text) return std::nullopt;
    int value = 0;
    const char* first = text->data();
    const char* last = first + text->size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      throw UsageError("--" + key + ": '" + *text + "' is not an integer");
    }
    return value;
  }

  int integer(const std::string& key) const {
    if (auto v = maybe_integer(key)) return *v;
    throw UsageError("--" + key + " is required");
  }

  std::string text_or(const std::string& key, const std::string& fallback) const {
    return raw(key).value_or(fallback);
  }

 private:
  std::map<std::string, std::string> cli_;
  ConfigFragment config_;
};

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::Csv;
  if (text == "human") return Format::Human;
  throw UsageError("--format must be csv or human, got '" + text + "'");
}

CouplingMode parse_mode(const std::string& text) {
  if (text == "paper") return CouplingMode::PaperFaithful;
  if (text == "pipeline") return CouplingMode::Pipeline;
  throw UsageError("--mode must be paper or pipeline, got '" + text + "'");
}

OrderingParams parse_ordering(const Settings& s, const std::string& fallback) {
  const auto name = s.text_or("ordering", fallback);
  if (auto p = find_preset(name)) return *p;
  throw UsageError("--ordering: unknown preset '" + name + "'");
}

SolverConfig solver_config(const Settings& s) {
  SolverConfig cfg;
  cfg.energy = s.number("energy");
  if (auto n = s.maybe_integer("segments")) cfg.segment_count = *n;
  if (auto l = s.maybe_number("half-width")) cfg.domain_half_width = *l;
  if (auto t = s.maybe_number("tolerance")) cfg.tolerance = *t;
  return cfg;
}

std::string num(double v) { return format_number(v); }

std::string complex_text(Complex z) {
  return num(z.real()) + (std::signbit(z.imag()) ? " - " : " + ") + num(std::abs(z.imag())) + "i";
}

std::string human_amplitudes(const ScatteringAmplitudes& a) {
  std::ostringstream os;
  if (a.k) os << "k = " << num(*a.k) << '\n';
  os << "R = " << complex_text(a.r) << '\n'
     << "T = " << complex_text(a.t) << '\n'
     << "|R|^2 = " << num(a.prob_r) << '\n'
     << "|T|^2 = " << num(a.prob_t) << '\n'
     << "unitarity_defect = " << num(a.unitarity_defect) << '\n';
  return os.str();
}

std::string ordering_row(const std::string& name, const OrderingParams& p) {
  const auto c = coefficients(p);
  return name + "," + num(p.alpha()) + "," + num(p.beta()) + "," + num(p.gamma()) + "," +
         num(c.g1) + "," + num(c.g2) + "," + num(c.G1) + "," + num(c.G2) + "," +
         num(c.delta_squared_factor());
}

std::string ordering_human(const std::string& name, const OrderingParams& p) {
  const auto c = coefficients(p);
  std::ostringstream os;
  os << name << ": alpha=" << num(p.alpha()) << " beta=" << num(p.beta())
     << " gamma=" << num(p.gamma()) << " g1=" << num(c.g1) << " g2=" << num(c.g2)
     << " G1=" << num(c.G1) << " G2=" << num(c.G2) << " 2G1-G2=" << num(c.delta_squared_factor())
     << '\n';
  return os.str();
}

constexpr std::string_view kOrderingHeader = "name,alpha,beta,gamma,g1,g2,G1,G2,two_G1_minus_G2";

std::string cmd_ordering_list(Format format) {
  std::string text;
  if (format == Format::Csv) {
    text = std::string(kOrderingHeader) + "\n";
  }
  for (const auto& n : presets()) {
    text += format == Format::Csv ? ordering_row(n.name, n.params) + "\n"
                                  : ordering_human(n.name, n.params);
  }
  return text;
}

std::string cmd_ordering_eval(const Settings& s, Format format) {
  const auto p = OrderingParams::from_alpha_beta(s.number("alpha"), s.number("beta"));
  if (format == Format::Csv) {
    return std::string(kOrderingHeader) + "\n" + ordering_row("custom", p) + "\n";
  }
  return ordering_human("custom", p);
}

std::string cmd_ordering_solve(const Settings& s, Format format) {
  const auto constraint = s.raw("constraint");
  if (!constraint) throw UsageError("--constraint is required");

  struct Line {
    std::string name;
    OrderingParams params;
    std::string status;
  };
  std::vector<Line> lines;
  if (*constraint == "free-particle") {
    for (const auto& p : solve_free_particle()) lines.push_back({"root", p, "satisfies G1 = G2 = 0"});
  } else if (*constraint == "delta2-free") {
    for (const auto& sol : solve_delta2_free_symmetric()) {
      lines.push_back({"root", sol.params, "satisfies 2G1 - G2 = 0"});
    }
    const auto claimed = preset("MM1_paper");
    const double residual = coefficients(claimed).delta_squared_factor();
    lines.push_back({"MM1_paper", claimed,
                     std::abs(residual) < 1e-12 ? "satisfies 2G1 - G2 = 0"
                                                : "fails constraint: 2G1-G2 = " + num(residual)});
  } else {
    throw UsageError("--constraint must be free-particle or delta2-free, got '" + *constraint + "'");
  }

  std::string text;
  if (format == Format::Csv) {
    text = "name,alpha,beta,gamma,G1,G2,two_G1_minus_G2,status\n";
    for (const auto& l : lines) {
      const auto c = coefficients(l.params);
      text += l.name + "," + num(l.params.alpha()) + "," + num(l.params.beta()) + "," +
              num(l.params.gamma()) + "," + num(c.G1) + "," + num(c.G2) + "," +
              num(c.delta_squared_factor()) + "," + l.status + "\n";
    }
    return text;
  }
  for (const auto& l : lines) {
    const auto c = coefficients(l.params);
    text += l.name + ": alpha=" + num(l.params.alpha()) + " beta=" + num(l.params.beta()) +
            " gamma=" + num(l.params.gamma()) + " G1=" + num(c.G1) + " G2=" + num(c.G2) + "  " +
            l.status + "\n";
  }
  if (*constraint == "delta2-free") {
    text += "note: asymmetric (alpha != gamma) solutions form a one-parameter family\n";
  }
  return text;
}

std::string row_output(SweepAxis axis, const SweepRow& row, Format format,
                       std::string_view param_name) {
  if (format == Format::Csv) {
    std::vector<SweepRow> rows{row};
    return format_sweep_csv(axis, rows);
  }
  return std::string(param_name) + " = " + num(row.parameter) + "\nu0 = " + num(row.u0) + "\n" +
         human_amplitudes(row.amplitudes);
}

void warn_range(double mu, std::ostream& err) {
  if (mu > -1.0 && mu <= 0.0) {
    err << "warning: mu = " << num(mu) << " is outside the mu > 0 range of the jump model\n";
  }
}

AnalyticOptions analytic_options(const Settings& s) {
  AnalyticOptions o;
  o.a = s.number_or("a", 0.0);
  o.k = s.maybe_number("k");
  o.mode = parse_mode(s.text_or("mode", "paper"));
  o.ordering = parse_ordering(s, "MM1_derived");
  return o;
}

std::string cmd_scatter_analytic(const Settings& s, Format format, std::ostream& err) {
  const double mu = s.number("mu");
  warn_range(mu, err);
  const auto row = analytic_mu_row(mu, analytic_options(s));
  return row_output(SweepAxis::Mu, row, format, "mu");
}

std::string cmd_scatter_oracle(const Settings& s, Format format) {
  const double u0 = s.number("u0");
  const double a = s.number("a");
  const double k = s.number("k");
  const auto oracle = amplitudes_matching_oracle(a, 0.5 * u0, k);
  const auto closed = amplitudes_with_delta(a, u0, k);
  const double diff = std::max(std::abs(oracle.r - closed.r), std::abs(oracle.t - closed.t));
  if (format == Format::Csv) {
    return "a,u0,k,re_r,im_r,re_t,im_t,prob_r,prob_t,unitarity_defect,closed_form_diff\n" + num(a) +
           "," + num(u0) + "," + num(k) + "," + num(oracle.r.real()) + "," + num(oracle.r.imag()) +
           "," + num(oracle.t.real()) + "," + num(oracle.t.imag()) + "," + num(oracle.prob_r) + "," +
           num(oracle.prob_t) + "," + num(oracle.unitarity_defect) + "," + num(diff) + "\n";
  }
  return "a = " + num(a) + "\nu0 = " + num(u0) + "\n" + human_amplitudes(oracle) +
         "closed_form_diff = " + num(diff) + "\n";
}

std::string cmd_scatter_numeric(const Settings& s, Format format, std::ostream& err) {
  const double mu = s.number("mu");
  const double eps = s.number("epsilon");
  warn_range(mu, err);
  const auto cfg = solver_config(s);
  const auto jump = MassProfile::heaviside_mu(mu);
  const auto smooth = regularize(jump, Regularizer::Tanh, eps);
  const SweepRow row{eps, jump_coupling(jump),
                     scatter_pdm_xspace(smooth, cfg, parse_ordering(s, "BenDanielDuke"))};
  return row_output(SweepAxis::Epsilon, row, format, "epsilon");
}

std::filesystem::path required_out(const Settings& s) {
  const auto out = s.raw("out");
  if (!out) throw UsageError("--out FILE is required for sweeps");
  return *out;
}

void cmd_sweep_mu(const Settings& s) {
  if (s.integer("steps") < 0) throw UsageError("--steps must be non-negative");
  const auto grid = linear_grid(s.number("from"), s.number("to"), s.integer("steps"));
  const auto path = required_out(s);
  const auto rows = sweep_mu(grid, analytic_options(s));
  write_sweep_csv(SweepAxis::Mu, rows, path);
}

void cmd_sweep_epsilon(const Settings& s) {
  if (s.integer("steps") < 0) throw UsageError("--steps must be non-negative");
  const auto grid = linear_grid(s.number("from"), s.number("to"), s.integer("steps"));
  const auto path = required_out(s);
  EpsilonSweepOptions o;
  o.mu = s.number("mu");
  o.config = solver_config(s);
  o.ordering = parse_ordering(s, "BenDanielDuke");
  o.a = s.number_or("a", 0.0);
  const auto solver = s.text_or("solver", "xspace");
  if (solver == "xspace") {
    o.solver = EpsilonSolver::XSpace;
  } else if (solver == "qspace") {
    o.solver = EpsilonSolver::QSpace;
  } else {
    throw UsageError("--solver must be xspace or qspace, got '" + solver + "'");
  }
  const auto rows = sweep_epsilon(grid, o);
  write_sweep_csv(SweepAxis::Epsilon, rows, path);
}

void emit(const std::string& text, const Settings& s, std::ostream& out) {
  if (const auto path = s.raw("out")) {
    std::ofstream file(*path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(Errc::IoFailure, "cannot open '" + *path + "'");
    file << text;
    if (!file.flush()) throw Error(Errc::IoFailure, "write to '" + *path + "' failed");
    return;
  }
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::IoFailure, "cannot read config '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

std::string one_line(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ' ');
  while (!text.empty() && text.back() == ' ') text.pop_back();
  return text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Position-dependent-mass jump scattering toolkit", "pdmscatter"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  std::map<std::string, std::string> values;
  auto flag = [&values](CLI::App* sub, const std::string& name, const std::string& help) {
    sub->add_option("--" + name, values[name], help);
  };

  flag(&app, "config", "key = value config file; flags override it");
  flag(&app, "format", "csv or human (default human)");
  flag(&app, "out", "output file (default standard output)");

  auto* ordering = app.add_subcommand("ordering", "von Roos ordering algebra")->require_subcommand(1);
  auto* ordering_list = ordering->add_subcommand("list", "named orderings with coefficients");
  auto* ordering_eval = ordering->add_subcommand("eval", "coefficients of (alpha, beta)");
  flag(ordering_eval, "alpha", "alpha");
  flag(ordering_eval, "beta", "beta; gamma = -1 - alpha - beta");
  auto* ordering_solve = ordering->add_subcommand("solve", "constraint solvers (alpha = gamma)");
  flag(ordering_solve, "constraint", "free-particle or delta2-free");

  auto* scatter = app.add_subcommand("scatter", "single scattering calculations")->require_subcommand(1);
  auto* analytic = scatter->add_subcommand("analytic", "closed-form amplitudes for m = 1 + mu h(x)");
  flag(analytic, "mu", "mass jump");
  flag(analytic, "a", "delta-well strength (default 0)");
  flag(analytic, "k", "wavenumber (needed when a != 0, default 1)");
  flag(analytic, "mode", "paper or pipeline (default paper)");
  flag(analytic, "ordering", "ordering preset (default MM1_derived)");
  auto* oracle = scatter->add_subcommand("oracle", "matching-condition solve with b = u0/2");
  flag(oracle, "u0", "coupling U(0)");
  flag(oracle, "a", "delta-well strength");
  flag(oracle, "k", "wavenumber");
  auto* numeric = scatter->add_subcommand("numeric", "x-space transfer matrix on a tanh ramp");
  flag(numeric, "mu", "mass jump");
  flag(numeric, "epsilon", "ramp width");
  flag(numeric, "energy", "energy E = k^2/2 (m = 1)");
  flag(numeric, "segments", "segment count (default 4000)");
  flag(numeric, "half-width", "domain half-width (default 20 max(epsilon, 1))");
  flag(numeric, "tolerance", "convergence tolerance (default 1e-8)");
  flag(numeric, "ordering", "ordering preset for V~ (default BenDanielDuke)");

  auto* sweep = app.add_subcommand("sweep", "parameter sweeps written as CSV")->require_subcommand(1);
  auto* sweep_mu_cmd = sweep->add_subcommand("mu", "closed-form amplitudes over a mu grid");
  for (const auto* name : {"from", "to", "steps"}) flag(sweep_mu_cmd, name, name);
  flag(sweep_mu_cmd, "a", "delta-well strength (default 0)");
  flag(sweep_mu_cmd, "k", "wavenumber (default 1)");
  flag(sweep_mu_cmd, "mode", "paper or pipeline (default paper)");
  flag(sweep_mu_cmd, "ordering", "ordering preset (default MM1_derived)");
  auto* sweep_eps_cmd = sweep->add_subcommand("epsilon", "regularization-width sweep");
  for (const auto* name : {"from", "to", "steps"}) flag(sweep_eps_cmd, name, name);
  flag(sweep_eps_cmd, "mu", "mass jump");
  flag(sweep_eps_cmd, "energy", "energy");
  flag(sweep_eps_cmd, "segments", "segment count");
  flag(sweep_eps_cmd, "half-width", "domain half-width");
  flag(sweep_eps_cmd, "tolerance", "convergence tolerance");
  flag(sweep_eps_cmd, "ordering", "ordering preset for V~ (default BenDanielDuke)");
  flag(sweep_eps_cmd, "solver", "xspace (default) or qspace");
  flag(sweep_eps_cmd, "a", "delta-well strength for the qspace solver");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << one_line(e.what()) << '\n';
    return kUsageError;
  }

  // keep only flags that were actually given
  std::map<std::string, std::string> given;
  std::function<void(CLI::App*)> collect = [&](CLI::App* a) {
    for (const auto* opt : a->get_options()) {
      if (opt->count() > 0 && opt->get_name() != "--help") {
        const auto name = opt->get_single_name();
        given[name] = values[name];
      }
    }
    for (auto* sub : a->get_subcommands()) {
      if (sub->parsed()) collect(sub);
    }
  };
  collect(&app);

  try {
    ConfigFragment config;
    if (auto it = given.find("config"); it != given.end()) {
      config = parse_config(read_file(it->second));
      for (const auto& w : config.warnings) err << "warning: config " << w << '\n';
    }
    const Settings s(std::move(given), std::move(config));
    const Format format = parse_format(s.text_or("format", "human"));

    if (ordering_list->parsed()) {
      emit(cmd_ordering_list(format), s, out);
    } else if (ordering_eval->parsed()) {
      emit(cmd_ordering_eval(s, format), s, out);
    } else if (ordering_solve->parsed()) {
      emit(cmd_ordering_solve(s, format), s, out);
    } else if (analytic->parsed()) {
      emit(cmd_scatter_analytic(s, format, err), s, out);
    } else if (oracle->parsed()) {
      emit(cmd_scatter_oracle(s, format), s, out);
    } else if (numeric->parsed()) {
      emit(cmd_scatter_numeric(s, format, err), s, out);
    } else if (sweep_mu_cmd->parsed()) {
      cmd_sweep_mu(s);
    } else if (sweep_eps_cmd->parsed()) {
      cmd_sweep_epsilon(s);
    }
    return kSuccess;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ConfigSyntaxError& e) {
    err << "config error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return e.code() == Errc::IoFailure ? kIoError : kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kDomainError;
  }
}

}  // namespace pdm::cli
