// Python bindings for the core operations. Thin: structs map to classes
// with readwrite fields, free functions keep their C++ names, errors map to
// ValueError (config) and RuntimeError (geometry/numerics).
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "abfringe/constants.hpp"
#include "abfringe/errors.hpp"
#include "abfringe/fields.hpp"
#include "abfringe/interferometer.hpp"
#include "abfringe/phase.hpp"
#include "abfringe/trajectory.hpp"
#include "abfringe/vec.hpp"

namespace py = pybind11;
using namespace abfringe;

namespace {

ScalingExponents scaling_exponents_vec(const WBConfig& cfg,
                                       const std::vector<double>& grid) {
  return scaling_exponents(cfg, std::span<const double>(grid));
}

double scaling_exponent_in_d_vec(const WBConfig& cfg,
                                 const std::vector<double>& grid) {
  return scaling_exponent_in_d(cfg, std::span<const double>(grid));
}

}  // namespace

PYBIND11_MODULE(_abfringe, m) {
  m.doc() = "Aharonov-Bohm phase and three-crystal interferometer core";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<GeometryError>(m, "GeometryError", PyExc_RuntimeError);
  py::register_exception<NumericsError>(m, "NumericsError", PyExc_RuntimeError);

  auto consts = m.def_submodule("constants", "Gaussian CGS constants");
  consts.attr("hbar") = constants::hbar;
  consts.attr("c") = constants::c;
  consts.attr("e") = constants::e;
  consts.attr("m_e") = constants::m_e;
  consts.attr("planck_h") = constants::planck_h;
  consts.attr("mc2") = constants::mc2;
  consts.attr("phase_per_flux") = constants::phase_per_flux;
  consts.attr("erg_per_kev") = constants::erg_per_kev;

  py::class_<Vec3>(m, "Vec3")
      .def(py::init<>())
      .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"),
           py::arg("z"))
      .def_readwrite("x", &Vec3::x)
      .def_readwrite("y", &Vec3::y)
      .def_readwrite("z", &Vec3::z)
      .def("norm", [](const Vec3& v) { return norm(v); })
      .def("__repr__", [](const Vec3& v) {
        return "Vec3(" + std::to_string(v.x) + ", " + std::to_string(v.y) +
               ", " + std::to_string(v.z) + ")";
      });

  py::enum_<WaveformKind>(m, "WaveformKind")
      .value("constant", WaveformKind::constant)
      .value("sinusoid", WaveformKind::sinusoid)
      .value("ramp", WaveformKind::ramp);

  py::class_<Waveform>(m, "Waveform")
      .def(py::init<>())
      .def_static("constant", &Waveform::constant, py::arg("b_static"))
      .def_static("sinusoid", &Waveform::sinusoid, py::arg("b_static"),
                  py::arg("b_amp"), py::arg("freq_hz"), py::arg("phase0") = 0.0)
      .def_static("ramp", &Waveform::ramp, py::arg("b_static"),
                  py::arg("rate"), py::arg("ramp_t0") = 0.0)
      .def_readwrite("kind", &Waveform::kind)
      .def_readwrite("b_static", &Waveform::b_static)
      .def_readwrite("b_amp", &Waveform::b_amp)
      .def_readwrite("freq_hz", &Waveform::freq_hz)
      .def_readwrite("phase0", &Waveform::phase0)
      .def_readwrite("rate", &Waveform::rate)
      .def_readwrite("ramp_t0", &Waveform::ramp_t0)
      .def("value", &Waveform::value, py::arg("t"))
      .def("d_dt", &Waveform::d_dt, py::arg("t"))
      .def("switch_on_reference", &Waveform::switch_on_reference, py::arg("t"))
      .def("validate", &Waveform::validate);

  py::class_<Solenoid>(m, "Solenoid")
      .def(py::init<>())
      .def(py::init([](double radius, const Waveform& w) {
             return Solenoid{radius, w};
           }),
           py::arg("radius"), py::arg("waveform"))
      .def_readwrite("radius", &Solenoid::radius)
      .def_readwrite("waveform", &Solenoid::waveform)
      .def("validate", &Solenoid::validate);

  m.def("vector_potential", &vector_potential, py::arg("solenoid"),
        py::arg("x"), py::arg("t"));
  m.def("magnetic_field", &magnetic_field, py::arg("solenoid"), py::arg("x"),
        py::arg("t"));
  m.def("electric_field", &electric_field, py::arg("solenoid"), py::arg("x"),
        py::arg("t"));
  m.def("flux", &flux, py::arg("solenoid"), py::arg("rho"), py::arg("t"));

  py::class_<LoopSpec>(m, "LoopSpec")
      .def(py::init<>())
      .def_readwrite("rho", &LoopSpec::rho)
      .def_readwrite("z0", &LoopSpec::z0)
      .def_readwrite("t0", &LoopSpec::t0)
      .def_readwrite("duration", &LoopSpec::duration)
      .def_readwrite("direction", &LoopSpec::direction)
      .def_readwrite("n_events", &LoopSpec::n_events)
      .def("validate", &LoopSpec::validate, py::arg("solenoid"));

  py::class_<QuadratureSpec>(m, "QuadratureSpec")
      .def(py::init<>())
      .def_readwrite("n_sub", &QuadratureSpec::n_sub)
      .def_readwrite("t_panels", &QuadratureSpec::t_panels);

  py::class_<PhaseBreakdown>(m, "PhaseBreakdown")
      .def_readonly("electric", &PhaseBreakdown::electric)
      .def_readonly("magnetic", &PhaseBreakdown::magnetic)
      .def_readonly("total", &PhaseBreakdown::total)
      .def_readonly("static_part", &PhaseBreakdown::static_part)
      .def_readonly("time_dependent_residual",
                    &PhaseBreakdown::time_dependent_residual);

  m.def("electric_phase", &electric_phase, py::arg("loop"), py::arg("solenoid"),
        py::arg("quadrature") = QuadratureSpec{});
  m.def("magnetic_flux_phase", &magnetic_flux_phase, py::arg("loop"),
        py::arg("solenoid"), py::arg("t_eval"),
        py::arg("quadrature") = QuadratureSpec{});
  m.def("total_phase", &total_phase, py::arg("loop"), py::arg("solenoid"),
        py::arg("quadrature") = QuadratureSpec{});

  py::class_<FaradayCheck>(m, "FaradayCheck")
      .def_readonly("emf", &FaradayCheck::emf)
      .def_readonly("flux_rate_term", &FaradayCheck::flux_rate_term)
      .def_readonly("residual", &FaradayCheck::residual);
  m.def("faraday_check", &faraday_check, py::arg("rho"), py::arg("solenoid"),
        py::arg("t"), py::arg("n_phi") = 64, py::arg("n_r") = 64);

  py::class_<InfinitesimalPhase>(m, "InfinitesimalPhase")
      .def_readonly("electric_piece", &InfinitesimalPhase::electric_piece)
      .def_readonly("magnetic_piece", &InfinitesimalPhase::magnetic_piece)
      .def_readonly("sum", &InfinitesimalPhase::sum);
  m.def("infinitesimal_phase", &infinitesimal_phase, py::arg("rho"),
        py::arg("dphi"), py::arg("dt"), py::arg("solenoid"), py::arg("t"));

  py::class_<WBConfig>(m, "WBConfig")
      .def(py::init<>())
      .def(py::init([](double d, double theta, double lambda, double b0) {
             return WBConfig{d, theta, lambda, b0};
           }),
           py::arg("d") = 5.0, py::arg("theta") = 2.0e-2,
           py::arg("lambda_cm") = 4.86e-10, py::arg("b0") = 1.0)
      .def_readwrite("d", &WBConfig::d)
      .def_readwrite("theta", &WBConfig::theta)
      .def_readwrite("lambda_cm", &WBConfig::lambda)
      .def_readwrite("b0", &WBConfig::b0)
      .def("validate", &WBConfig::validate);

  m.def("radius_of_curvature", &radius_of_curvature, py::arg("lambda_cm"),
        py::arg("b0"));

  py::class_<Leg>(m, "Leg")
      .def_readonly("start", &Leg::start)
      .def_readonly("end", &Leg::end)
      .def_readonly("entry_angle", &Leg::entry_angle)
      .def_readonly("exit_angle", &Leg::exit_angle)
      .def_readonly("length", &Leg::length)
      .def_readonly("free_length", &Leg::free_length)
      .def_readonly("delta", &Leg::delta);

  py::class_<PathSet>(m, "PathSet")
      .def_readonly("l1", &PathSet::l1)
      .def_readonly("l2", &PathSet::l2)
      .def_readonly("m1", &PathSet::m1)
      .def_readonly("m2", &PathSet::m2)
      .def_readonly("enclosed_area", &PathSet::enclosed_area)
      .def_readonly("path_length_difference", &PathSet::path_length_difference);

  m.def("build_geometry", &build_geometry, py::arg("config"));

  py::class_<ScalingExponents>(m, "ScalingExponents")
      .def_readonly("l1", &ScalingExponents::l1)
      .def_readonly("l2", &ScalingExponents::l2)
      .def_readonly("m1", &ScalingExponents::m1)
      .def_readonly("m2", &ScalingExponents::m2);
  m.def("scaling_exponents", &scaling_exponents_vec, py::arg("config"),
        py::arg("b_grid"));
  m.def("scaling_exponent_in_d", &scaling_exponent_in_d_vec, py::arg("config"),
        py::arg("d_grid"));

  py::class_<PhaseReport>(m, "PhaseReport")
      .def_readonly("ab_phase", &PhaseReport::ab_phase)
      .def_readonly("dynamical_phase", &PhaseReport::dynamical_phase)
      .def_readonly("net_phase", &PhaseReport::net_phase)
      .def_readonly("d_over_r", &PhaseReport::d_over_r)
      .def_readonly("regime_ok", &PhaseReport::regime_ok)
      .def_readonly("regime_marginal", &PhaseReport::regime_marginal);
  m.def("phase_report", &phase_report, py::arg("config"),
        py::arg("include_second_order") = true);

  py::enum_<FringeModel>(m, "FringeModel")
      .value("naive_ab", FringeModel::naive_ab)
      .value("werner_brill", FringeModel::werner_brill)
      .value("full_cancellation", FringeModel::full_cancellation);

  py::class_<FringeSample>(m, "FringeSample")
      .def_readonly("t", &FringeSample::t)
      .def_readonly("b", &FringeSample::b)
      .def_readonly("phase", &FringeSample::phase)
      .def_readonly("solvable", &FringeSample::solvable);

  py::class_<FringeSeries>(m, "FringeSeries")
      .def_readonly("samples", &FringeSeries::samples)
      .def_readonly("peak_to_peak", &FringeSeries::peak_to_peak)
      .def_readonly("skipped", &FringeSeries::skipped);
  m.def("fringe_time_series", &fringe_time_series, py::arg("config"),
        py::arg("waveform"), py::arg("n_samples"), py::arg("model"),
        py::arg("threads") = 1);

  m.def("momentum_from_wavelength", &momentum_from_wavelength,
        py::arg("lambda_cm"));
  m.def("pc_from_kinetic", &pc_from_kinetic, py::arg("kinetic"));
  m.def("total_energy", &total_energy, py::arg("p"));
  m.def("speed", &speed, py::arg("p"));
  m.def("gyro_period", &gyro_period, py::arg("p"), py::arg("b"));
  m.def("leg_length", &leg_length, py::arg("start"), py::arg("entry_angle"),
        py::arg("plane_x"), py::arg("lambda_cm"), py::arg("b0"),
        py::arg("dt_frac") = 1e-4);
}
