#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pdm/cli.hpp"
#include "pdm/error.hpp"
#include "pdm/mass_model.hpp"
#include "pdm/numeric.hpp"
#include "pdm/ordering.hpp"
#include "pdm/pct.hpp"
#include "pdm/point_scatter.hpp"
#include "pdm/sweep.hpp"

namespace py = pybind11;
using namespace pdm;

PYBIND11_MODULE(pdmscatter, m) {
  m.doc() = "Position-dependent-mass jump scattering";

  py::register_exception<Error>(m, "PdmError", PyExc_ValueError);

  py::enum_<Regularizer>(m, "Regularizer")
      .value("Tanh", Regularizer::Tanh)
      .value("LinearRamp", Regularizer::LinearRamp)
      .value("ErrorFunction", Regularizer::ErrorFunction);

  py::enum_<CouplingMode>(m, "CouplingMode")
      .value("PaperFaithful", CouplingMode::PaperFaithful)
      .value("Pipeline", CouplingMode::Pipeline);

  py::class_<MassProfile>(m, "MassProfile")
      .def_static("heaviside_mu", &MassProfile::heaviside_mu, py::arg("mu"))
      .def_static("heaviside", &MassProfile::heaviside, py::arg("m1"), py::arg("m2"), py::arg("m3"))
      .def_static(
          "smooth",
          [](double m1, double m2, double m3, Regularizer reg, double eps) {
            return MassProfile::smooth({m1, m2, m3}, reg, eps);
          },
          py::arg("m1"), py::arg("m2"), py::arg("m3"), py::arg("regularizer"), py::arg("epsilon"))
      .def("is_jump", &MassProfile::is_jump)
      .def("regularize",
           [](const MassProfile& p, Regularizer reg, double eps) { return regularize(p, reg, eps); })
      .def("__call__", [](const MassProfile& p, double x) { return mass_at(p, x); });

  m.def("mass_at", &mass_at, py::arg("profile"), py::arg("x"));
  m.def("pct_coordinate", &pct_coordinate, py::arg("profile"), py::arg("x"));
  m.def("jump_coupling", &jump_coupling, py::arg("profile"));

  py::class_<OrderingParams>(m, "OrderingParams")
      .def_static("from_alpha_beta", &OrderingParams::from_alpha_beta)
      .def_static("from_triple", &OrderingParams::from_triple)
      .def_property_readonly("alpha", &OrderingParams::alpha)
      .def_property_readonly("beta", &OrderingParams::beta)
      .def_property_readonly("gamma", &OrderingParams::gamma)
      .def("__repr__", [](const OrderingParams& p) {
        std::ostringstream os;
        os << "OrderingParams(" << p.alpha() << ", " << p.beta() << ", " << p.gamma() << ")";
        return os.str();
      });

  py::class_<AmbiguityCoefficients>(m, "AmbiguityCoefficients")
      .def_readonly("g1", &AmbiguityCoefficients::g1)
      .def_readonly("g2", &AmbiguityCoefficients::g2)
      .def_readonly("G1", &AmbiguityCoefficients::G1)
      .def_readonly("G2", &AmbiguityCoefficients::G2)
      .def("delta_squared_factor", &AmbiguityCoefficients::delta_squared_factor);

  m.def("coefficients", &coefficients, py::arg("params"));
  m.def("preset", &preset, py::arg("name"));
  m.def("preset_names", [] {
    std::vector<std::string> names;
    for (const auto& n : presets()) names.push_back(n.name);
    return names;
  });
  m.def("solve_free_particle", &solve_free_particle);
  m.def("solve_delta2_free_symmetric", [] {
    std::vector<OrderingParams> roots;
    for (const auto& s : solve_delta2_free_symmetric()) roots.push_back(s.params);
    return roots;
  });

  py::class_<PointInteraction>(m, "PointInteraction")
      .def_readonly("delta_strength", &PointInteraction::delta_strength)
      .def_readonly("delta_prime_coupling", &PointInteraction::delta_prime_coupling)
      .def_readonly("delta_squared_coeff", &PointInteraction::delta_squared_coeff)
      .def("usable", &PointInteraction::usable)
      .def("effective_u0", &PointInteraction::effective_u0);

  m.def("reduce_point_interaction", &reduce_point_interaction, py::arg("profile"),
        py::arg("params"), py::arg("mode") = CouplingMode::PaperFaithful);
  m.def("tilde_potential",
        py::overload_cast<const MassProfile&, const OrderingParams&, double>(&tilde_potential));
  m.def("effective_potential_smooth", &effective_potential_smooth);

  py::class_<ScatteringAmplitudes>(m, "ScatteringAmplitudes")
      .def_readonly("r", &ScatteringAmplitudes::r)
      .def_readonly("t", &ScatteringAmplitudes::t)
      .def_readonly("k", &ScatteringAmplitudes::k)
      .def_readonly("prob_r", &ScatteringAmplitudes::prob_r)
      .def_readonly("prob_t", &ScatteringAmplitudes::prob_t)
      .def_readonly("unitarity_defect", &ScatteringAmplitudes::unitarity_defect);

  m.def("amplitudes_pure_dprime", &amplitudes_pure_dprime, py::arg("u0"));
  m.def("mu_sweep_amplitudes", &mu_sweep_amplitudes, py::arg("mu"));
  m.def("amplitudes_with_delta", &amplitudes_with_delta, py::arg("a"), py::arg("u0"), py::arg("k"));
  m.def("amplitudes_matching_oracle", &amplitudes_matching_oracle, py::arg("a"), py::arg("b"),
        py::arg("k"));
  m.def("bound_state", &bound_state, py::arg("a"), py::arg("u0"));

  py::class_<SolverConfig>(m, "SolverConfig")
      .def(py::init<>())
      .def_readwrite("domain_half_width", &SolverConfig::domain_half_width)
      .def_readwrite("segment_count", &SolverConfig::segment_count)
      .def_readwrite("energy", &SolverConfig::energy)
      .def_readwrite("tolerance", &SolverConfig::tolerance)
      .def_readwrite("max_refinements", &SolverConfig::max_refinements);

  m.def(
      "scatter_pdm_xspace",
      [](const MassProfile& p, const SolverConfig& cfg, const std::string& ordering) {
        return scatter_pdm_xspace(p, cfg, preset(ordering));
      },
      py::arg("profile"), py::arg("config") = SolverConfig{},
      py::arg("ordering") = "BenDanielDuke");

  m.def(
      "sweep_mu_csv",
      [](double from, double to, int steps) {
        const auto grid = linear_grid(from, to, steps);
        const auto rows = sweep_mu(grid, AnalyticOptions{});
        return format_sweep_csv(SweepAxis::Mu, rows);
      },
      py::arg("start"), py::arg("stop"), py::arg("steps"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command line in-process; returns (exit_code, stdout, stderr).");
}
