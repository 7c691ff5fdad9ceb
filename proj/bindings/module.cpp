#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "spinpair/dynamics.hpp"
#include "spinpair/entanglement.hpp"
#include "spinpair/experiments.hpp"
#include "spinpair/master_equation.hpp"
#include "spinpair/observables.hpp"
#include "spinpair/spin_algebra.hpp"

namespace py = pybind11;
using namespace spinpair;

namespace {

PauliAxis axis_from_string(const std::string& s) {
  if (s == "x") return PauliAxis::X;
  if (s == "y") return PauliAxis::Y;
  if (s == "z") return PauliAxis::Z;
  if (s == "+") return PauliAxis::Plus;
  if (s == "-") return PauliAxis::Minus;
  throw std::invalid_argument("axis must be one of x, y, z, +, -");
}

Eigen::Matrix<double, Eigen::Dynamic, 15> states_matrix(const Trajectory& t) {
  Eigen::Matrix<double, Eigen::Dynamic, 15> m(t.states.size(), 15);
  for (std::size_t i = 0; i < t.states.size(); ++i) {
    m.row(static_cast<Eigen::Index>(i)) = t.states[i].block_vector().transpose();
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dissipative dynamics and entanglement storage of a dipolar-coupled "
            "qubit pair in a spatially correlated environment";

  py::class_<AngularConfig>(m, "AngularConfig")
      .def(py::init<double, double>(), py::arg("theta") = 0.0, py::arg("phi") = 0.0)
      .def_readwrite("theta", &AngularConfig::theta)
      .def_readwrite("phi", &AngularConfig::phi);

  py::class_<PhysicalParams>(m, "PhysicalParams")
      .def(py::init([](double J, double delta_omega, double M0, double alpha,
                       double omega0, double tau_c, double omega_d, double theta,
                       double phi) {
             PhysicalParams p;
             p.J = J;
             p.delta_omega = delta_omega;
             p.M0 = M0;
             p.alpha = alpha;
             p.omega0 = omega0;
             p.tau_c = tau_c;
             p.omega_d = omega_d;
             p.ang = {theta, phi};
             p.validate();
             return p;
           }),
           py::arg("J") = 1.0, py::arg("delta_omega") = 0.0, py::arg("M0") = 0.0,
           py::arg("alpha") = 0.0, py::arg("omega0") = 0.0, py::arg("tau_c") = 1.0,
           py::arg("omega_d") = 0.0, py::arg("theta") = 0.0, py::arg("phi") = 0.0)
      .def_readwrite("J", &PhysicalParams::J)
      .def_readwrite("delta_omega", &PhysicalParams::delta_omega)
      .def_readwrite("M0", &PhysicalParams::M0)
      .def_readwrite("alpha", &PhysicalParams::alpha)
      .def_readwrite("omega0", &PhysicalParams::omega0)
      .def_readwrite("tau_c", &PhysicalParams::tau_c)
      .def_readwrite("omega_d", &PhysicalParams::omega_d)
      .def_readwrite("ang", &PhysicalParams::ang);

  py::class_<RateSet>(m, "RateSet")
      .def(py::init<>())
      .def_property_readonly("kappa",
                             [](const RateSet& r) {
                               return std::vector<double>(r.kappa.begin(),
                                                          r.kappa.end());
                             })
      .def_property_readonly("delta_kappa",
                             [](const RateSet& r) {
                               return std::vector<double>(r.delta_kappa.begin(),
                                                          r.delta_kappa.end());
                             })
      .def_readonly("omega_d0", &RateSet::omega_d0);

  py::class_<Model>(m, "Model")
      .def_static("from_physical", &Model::from_physical)
      .def_static(
          "from_scaled",
          [](double M0, double alpha, double kappa1_star, double kappa2_star,
             double kappa0_star, double delta_kappa1_star,
             double delta_kappa2_star, double omega_d0_star,
             double delta_omega_star) {
            ScaledRates s;
            s.M0 = M0;
            s.alpha = alpha;
            s.kappa1_star = kappa1_star;
            s.kappa2_star = kappa2_star;
            s.kappa0_star = kappa0_star;
            s.delta_kappa1_star = delta_kappa1_star;
            s.delta_kappa2_star = delta_kappa2_star;
            s.omega_d0_star = omega_d0_star;
            s.delta_omega_star = delta_omega_star;
            return Model::from_scaled(s);
          },
          py::arg("M0") = 0.0, py::arg("alpha") = 1.0,
          py::arg("kappa1_star") = 0.0, py::arg("kappa2_star") = 0.0,
          py::arg("kappa0_star") = 0.0, py::arg("delta_kappa1_star") = 0.0,
          py::arg("delta_kappa2_star") = 0.0, py::arg("omega_d0_star") = 0.0,
          py::arg("delta_omega_star") = 0.0)
      .def_readwrite("J", &Model::J)
      .def_readwrite("delta_omega", &Model::delta_omega)
      .def_readwrite("M0", &Model::M0)
      .def_readwrite("alpha", &Model::alpha)
      .def_readonly("rates", &Model::rates);

  py::class_<ObservableVector>(m, "ObservableVector")
      .def(py::init<>())
      .def_readwrite("Mx", &ObservableVector::Mx)
      .def_readwrite("My", &ObservableVector::My)
      .def_readwrite("Mz", &ObservableVector::Mz)
      .def_readwrite("Ax", &ObservableVector::Ax)
      .def_readwrite("Ay", &ObservableVector::Ay)
      .def_readwrite("Az", &ObservableVector::Az)
      .def_readwrite("Mxy", &ObservableVector::Mxy)
      .def_readwrite("Mxz", &ObservableVector::Mxz)
      .def_readwrite("Myz", &ObservableVector::Myz)
      .def_readwrite("Axy", &ObservableVector::Axy)
      .def_readwrite("Axz", &ObservableVector::Axz)
      .def_readwrite("Ayz", &ObservableVector::Ayz)
      .def_readwrite("Mzz", &ObservableVector::Mzz)
      .def_readwrite("Mc", &ObservableVector::Mc)
      .def_readwrite("Ac", &ObservableVector::Ac)
      .def("block_vector", &ObservableVector::block_vector)
      .def_static("from_block_vector", &ObservableVector::from_block_vector)
      .def("f_invariant", &ObservableVector::f_invariant);

  m.def("pauli",
        [](const std::string& axis, int qubit) {
          return pauli(axis_from_string(axis), qubit);
        },
        py::arg("axis"), py::arg("qubit"));
  m.def("spherical_harmonic_y2",
        [](int order, double theta, double phi) {
          return spherical_harmonic_y2(order, {theta, phi});
        },
        py::arg("order"), py::arg("theta"), py::arg("phi"));
  m.def("build_t2", &build_t2, py::arg("order"));
  m.def("dipolar_hamiltonian",
        [](double omega_d, double theta, double phi) {
          const auto dd = dipolar_hamiltonian(omega_d, {theta, phi});
          return py::make_tuple(dd.h, dd.omega_dm);
        },
        py::arg("omega_d"), py::arg("theta"), py::arg("phi"));

  m.def("compute_rates", &compute_rates, py::arg("params"));
  m.def("build_coherent_part", &build_coherent_part, py::arg("model"));
  m.def("build_dissipator_D", &build_dissipator_D, py::arg("model"));
  m.def("build_dissipator_Q", &build_dissipator_Q, py::arg("rates"));
  m.def("assemble_liouvillian", &assemble_liouvillian, py::arg("model"));

  m.def("rho_to_observables", &rho_to_observables, py::arg("rho"));
  m.def("observables_to_rho", &observables_to_rho, py::arg("observables"));
  m.def("singlet_observables", &singlet_observables);
  m.def("triplet_observables", &triplet_observables);
  m.def("dipolar_order_observables", &dipolar_order_observables);
  m.def("thermal_observables", &thermal_observables, py::arg("M0"));

  py::class_<BlockSystem>(m, "BlockSystem")
      .def_readonly("L1", &BlockSystem::L1)
      .def_readonly("B1", &BlockSystem::B1)
      .def_readonly("L2", &BlockSystem::L2)
      .def_readonly("L3", &BlockSystem::L3)
      .def_readonly("L4", &BlockSystem::L4)
      .def_readonly("L5", &BlockSystem::L5)
      .def("full_matrix", &BlockSystem::full_matrix)
      .def("inhomogeneity", &BlockSystem::inhomogeneity);
  m.def("build_block_system", &build_block_system, py::arg("model"));

  py::class_<Trajectory>(m, "Trajectory")
      .def_property_readonly("times",
                             [](const Trajectory& t) { return t.times; })
      .def_property_readonly("states", &states_matrix,
                             "sample-by-15 matrix in block ordering "
                             "(Mz, Mzz, Mc, Mx, My, Mxz, Myz, Mxy, Ac, Axy, Az, "
                             "Ax, Ay, Axz, Ayz)")
      .def_property_readonly(
          "observables",
          [](const Trajectory& t) { return t.states; })
      .def_readonly("method_used", &Trajectory::method_used)
      .def_readonly("stiffness_switch", &Trajectory::stiffness_switch);

  m.def(
      "integrate_block",
      [](const BlockSystem& sys, const ObservableVector& init, double t_end,
         double tol, int sample_count, bool log_sampling, double log_decades) {
        IntegrateOptions o;
        o.tol = tol;
        o.sample_count = sample_count;
        o.log_sampling = log_sampling;
        o.log_decades = log_decades;
        return integrate(sys, init, t_end, o);
      },
      py::arg("system"), py::arg("init"), py::arg("t_end"),
      py::arg("tol") = 1e-10, py::arg("sample_count") = 400,
      py::arg("log_sampling") = true, py::arg("log_decades") = 6.0);
  m.def(
      "integrate_liouville",
      [](const Superoperator& gen, const Operator& rho0, double t_end,
         double tol, int sample_count, bool log_sampling, double log_decades) {
        IntegrateOptions o;
        o.tol = tol;
        o.sample_count = sample_count;
        o.log_sampling = log_sampling;
        o.log_decades = log_decades;
        return integrate(gen, rho0, t_end, o);
      },
      py::arg("generator"), py::arg("rho0"), py::arg("t_end"),
      py::arg("tol") = 1e-10, py::arg("sample_count") = 400,
      py::arg("log_sampling") = true, py::arg("log_decades") = 6.0);

  py::enum_<SteadyStateMode>(m, "SteadyStateMode")
      .value("Regular", SteadyStateMode::Regular)
      .value("ConservedManifold", SteadyStateMode::ConservedManifold);
  py::class_<SteadyState>(m, "SteadyState")
      .def_readonly("values", &SteadyState::values)
      .def_readonly("mode", &SteadyState::mode)
      .def_readonly("F", &SteadyState::F)
      .def_readonly("residual", &SteadyState::residual)
      .def_readonly("near_singular_warning", &SteadyState::near_singular_warning);
  m.def("steady_state", &steady_state, py::arg("model"), py::arg("init"));
  m.def("steady_state_regular_closed_form", &steady_state_regular_closed_form,
        py::arg("M0"), py::arg("alpha"), py::arg("kappa1_star"),
        py::arg("kappa2_star"));
  m.def("steady_state_common_closed_form", &steady_state_common_closed_form,
        py::arg("M0"), py::arg("kappa1_star"), py::arg("kappa2_star"),
        py::arg("F"));

  py::class_<SpectralAnalysis>(m, "SpectralAnalysis")
      .def_readonly("eigenvalues", &SpectralAnalysis::eigenvalues)
      .def_readonly("null_space", &SpectralAnalysis::null_space)
      .def_readonly("null_dimension", &SpectralAnalysis::null_dimension);
  m.def("spectral_analysis", &spectral_analysis, py::arg("generator"));

  py::enum_<ConcurrenceRoute>(m, "ConcurrenceRoute")
      .value("Wootters", ConcurrenceRoute::Wootters)
      .value("ClosedForm", ConcurrenceRoute::ClosedForm);
  py::class_<ConcurrenceResult>(m, "ConcurrenceResult")
      .def_readonly("value", &ConcurrenceResult::value)
      .def_readonly("route", &ConcurrenceResult::route)
      .def_readonly("lambdas", &ConcurrenceResult::lambdas);
  m.def("concurrence_wootters", &concurrence_wootters, py::arg("rho"));
  m.def("concurrence_closed_form", &concurrence_closed_form, py::arg("Mz"),
        py::arg("Mzz"), py::arg("Mc"));
  m.def("concurrence_guard", &concurrence_guard, py::arg("observables"));

  m.def(
      "run_scenario_file",
      [](const std::filesystem::path& config, const std::filesystem::path& outdir,
         const std::string& basename) {
        const ScenarioConfig cfg = ScenarioConfig::from_json_file(config);
        const ScenarioResult r = run_scenario(cfg);
        write_scenario_outputs(cfg, r, outdir, basename);
      },
      py::arg("config"), py::arg("outdir"), py::arg("basename") = "run");
}
