#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qtt/circuit.hpp"
#include "qtt/lindblad.hpp"
#include "qtt/sweep.hpp"
#include "qtt/thermo.hpp"

namespace py = pybind11;
using namespace qtt;

PYBIND11_MODULE(qttsim, m) {
    m.doc() = "superconducting quantum thermal transistor simulator";

    py::enum_<BathId>(m, "BathId")
        .value("S", BathId::S)
        .value("M", BathId::M)
        .value("D", BathId::D);

    // circuit
    py::class_<circuit::RawCircuitParams>(m, "RawCircuitParams")
        .def(py::init([](double C1, double C2, double C3, double Cg1, double Cg2, double L2,
                         double EJ1, double EJ3) {
                 return circuit::RawCircuitParams{C1, C2, C3, Cg1, Cg2, L2, EJ1, EJ3};
             }),
             py::arg("C1"), py::arg("C2"), py::arg("C3"), py::arg("Cg1"), py::arg("Cg2"),
             py::arg("L2"), py::arg("EJ1"), py::arg("EJ3"))
        .def_readwrite("C1", &circuit::RawCircuitParams::C1)
        .def_readwrite("C2", &circuit::RawCircuitParams::C2)
        .def_readwrite("C3", &circuit::RawCircuitParams::C3)
        .def_readwrite("Cg1", &circuit::RawCircuitParams::Cg1)
        .def_readwrite("Cg2", &circuit::RawCircuitParams::Cg2)
        .def_readwrite("L2", &circuit::RawCircuitParams::L2)
        .def_readwrite("EJ1", &circuit::RawCircuitParams::EJ1)
        .def_readwrite("EJ3", &circuit::RawCircuitParams::EJ3);
    py::class_<circuit::DerivedDeviceParams>(m, "DerivedDeviceParams")
        .def_readonly("EC1", &circuit::DerivedDeviceParams::EC1)
        .def_readonly("EC2", &circuit::DerivedDeviceParams::EC2)
        .def_readonly("EC3", &circuit::DerivedDeviceParams::EC3)
        .def_readonly("EL2", &circuit::DerivedDeviceParams::EL2)
        .def_readonly("alpha1", &circuit::DerivedDeviceParams::alpha1)
        .def_readonly("beta1", &circuit::DerivedDeviceParams::beta1)
        .def_readonly("alpha3", &circuit::DerivedDeviceParams::alpha3)
        .def_readonly("beta3", &circuit::DerivedDeviceParams::beta3)
        .def_readonly("omega_r", &circuit::DerivedDeviceParams::omega_r)
        .def_readonly("g1", &circuit::DerivedDeviceParams::g1)
        .def_readonly("g3", &circuit::DerivedDeviceParams::g3)
        .def_readonly("Delta1", &circuit::DerivedDeviceParams::Delta1)
        .def_readonly("Delta2", &circuit::DerivedDeviceParams::Delta2)
        .def_readonly("Delta3", &circuit::DerivedDeviceParams::Delta3);
    py::class_<circuit::TransmonLevels>(m, "TransmonLevels")
        .def_readonly("omega1", &circuit::TransmonLevels::omega1)
        .def_readonly("omega2", &circuit::TransmonLevels::omega2)
        .def_readonly("omega3", &circuit::TransmonLevels::omega3);
    m.def("capacitance_matrix", &circuit::capacitance_matrix);
    m.def("invert_capacitance_matrix", &circuit::invert_capacitance_matrix);
    m.def("derive_device_params",
          [](const circuit::RawCircuitParams& p) { return circuit::derive_device_params(p); });
    m.def("transmon_levels", &circuit::transmon_levels);
    m.def("dispersive_coupling", [](const circuit::DerivedDeviceParams& dp,
                                    const circuit::TransmonLevels& lv) {
        return circuit::dispersive_coupling(dp, lv);
    });
    m.def("check_suppression",
          [](double g1, double g3, double lam, double beta, double dominance) {
              const auto r = circuit::check_suppression(g1, g3, lam, beta, dominance);
              return py::make_tuple(r.lhs, r.rhs, r.pass);
          },
          py::arg("g1"), py::arg("g3"), py::arg("anharmonicity"), py::arg("detuning_beta"),
          py::arg("dominance") = 10.0);
    m.def("solve_josephson_for_target", &circuit::solve_josephson_for_target);

    // spectrum
    py::class_<spectrum::TransistorSpec>(m, "TransistorSpec")
        .def_readonly("omega1", &spectrum::TransistorSpec::omega1)
        .def_readonly("omega2", &spectrum::TransistorSpec::omega2)
        .def_readonly("omega3", &spectrum::TransistorSpec::omega3)
        .def_readonly("g", &spectrum::TransistorSpec::g)
        .def_readonly("Omega", &spectrum::TransistorSpec::Omega)
        .def_readonly("lambda_", &spectrum::TransistorSpec::lambda);
    py::class_<spectrum::EigenSystem>(m, "EigenSystem")
        .def_readonly("energies", &spectrum::EigenSystem::energies)
        .def_readonly("states", &spectrum::EigenSystem::states);
    py::class_<spectrum::CollapseChannel>(m, "CollapseChannel")
        .def_readonly("bath", &spectrum::CollapseChannel::bath)
        .def_readonly("index", &spectrum::CollapseChannel::index)
        .def_readonly("matrix", &spectrum::CollapseChannel::matrix)
        .def_readonly("frequency", &spectrum::CollapseChannel::frequency)
        .def_readonly("degeneracy_weight", &spectrum::CollapseChannel::degeneracy_weight)
        .def_readonly("rate_weight", &spectrum::CollapseChannel::rate_weight);
    m.def("make_spec", &spectrum::make_spec, py::arg("omega2"), py::arg("omega3"), py::arg("g"),
          py::arg("Omega"), py::arg("g_ratio_max") = 0.1);
    m.def("make_spec_relative", &spectrum::make_spec_relative, py::arg("omega2_over_Omega"),
          py::arg("lambda_"), py::arg("g_over_omega1"), py::arg("Omega") = 1.0,
          py::arg("g_ratio_max") = 0.1);
    m.def("build_hamiltonian", &spectrum::build_hamiltonian);
    m.def("eigensystem", &spectrum::eigensystem);
    m.def("collapse_channels", &spectrum::collapse_channels);
    m.def("to_product_basis", &spectrum::to_product_basis);

    // bath
    py::class_<bath::BathSpec>(m, "BathSpec")
        .def_readonly("id", &bath::BathSpec::id)
        .def_readonly("Omega_f", &bath::BathSpec::Omega_f)
        .def_readonly("T", &bath::BathSpec::T)
        .def_readonly("Q", &bath::BathSpec::Q)
        .def_readonly("R", &bath::BathSpec::R);
    py::class_<bath::RatePair>(m, "RatePair")
        .def_readonly("bath", &bath::RatePair::bath)
        .def_readonly("index", &bath::RatePair::index)
        .def_readonly("frequency", &bath::RatePair::frequency)
        .def_readonly("alpha_rate", &bath::RatePair::alpha_rate)
        .def_readonly("beta_rate", &bath::RatePair::beta_rate);
    m.def("bath_specs", &bath::bath_specs);
    m.def("spectral_density", &bath::spectral_density);
    m.def("golden_rule_rates", &bath::golden_rule_rates, py::arg("channels"), py::arg("baths"),
          py::arg("coupling"), py::arg("swap_g"), py::arg("weak_coupling_max") = 0.1);

    // lindblad
    py::class_<lindblad::PopulationRateMatrix>(m, "PopulationRateMatrix")
        .def_readonly("M", &lindblad::PopulationRateMatrix::M);
    py::class_<lindblad::SteadyState>(m, "SteadyState")
        .def_readonly("populations", &lindblad::SteadyState::populations)
        .def_readonly("residual", &lindblad::SteadyState::residual);
    m.def("build_rate_matrix", &lindblad::build_rate_matrix);
    m.def("steady_state", &lindblad::steady_state);
    m.def("slowest_relaxation_rate", &lindblad::slowest_relaxation_rate);
    m.def("evolve",
          [](const Matrix6cd& rho0, double duration,
             const std::vector<spectrum::CollapseChannel>& channels,
             const std::vector<bath::RatePair>& rates, const Matrix6d& H) {
              return lindblad::evolve(rho0, duration, channels, rates, H);
          });

    // thermo
    py::class_<thermo::BathSettings>(m, "BathSettings")
        .def(py::init<>())
        .def_readwrite("T_S", &thermo::BathSettings::T_S)
        .def_readwrite("T_D", &thermo::BathSettings::T_D)
        .def_readwrite("Q", &thermo::BathSettings::Q)
        .def_readwrite("R", &thermo::BathSettings::R)
        .def_readwrite("coupling_ratio", &thermo::BathSettings::coupling_ratio);
    py::class_<thermo::Device>(m, "Device")
        .def_readonly("spec", &thermo::Device::spec)
        .def_readonly("es", &thermo::Device::es)
        .def_readonly("channels", &thermo::Device::channels);
    py::class_<thermo::HeatReport>(m, "HeatReport")
        .def_readonly("T_M", &thermo::HeatReport::T_M)
        .def_readonly("J_S", &thermo::HeatReport::J_S)
        .def_readonly("J_M", &thermo::HeatReport::J_M)
        .def_readonly("J_D", &thermo::HeatReport::J_D)
        .def_readonly("state", &thermo::HeatReport::state);
    py::class_<thermo::SwitchResult>(m, "SwitchResult")
        .def_readonly("J_S_off", &thermo::SwitchResult::J_S_off)
        .def_readonly("J_S_on", &thermo::SwitchResult::J_S_on)
        .def_readonly("contrast", &thermo::SwitchResult::contrast);
    m.def("make_device", &thermo::make_device);
    m.def("evaluate_point", &thermo::evaluate_point);
    m.def("switch_characterize", &thermo::switch_characterize);

    // cli / sweep
    m.def("run_sweep_csv",
          [](const std::string& config_text, int workers) {
              const auto cfg = cli::parse_config(config_text);
              return cli::to_csv(cli::run_sweep(cfg, workers), cfg.precision);
          },
          py::arg("config_text"), py::arg("workers") = 1);
    m.def("serialize_default_config",
          []() { return cli::serialize_config(cli::RunConfig{}); });
}
