#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tbsample/analysis.hpp"
#include "tbsample/encoders.hpp"
#include "tbsample/integral.hpp"
#include "tbsample/norms.hpp"
#include "tbsample/quantize.hpp"
#include "tbsample/reconstruct.hpp"

namespace py = pybind11;
using namespace tbs;

PYBIND11_MODULE(_core, m) {
  m.doc() = "threshold-based sampling: integrate-and-fire / send-on-delta core";

  py::enum_<ResetMode>(m, "ResetMode")
      .value("Mod", ResetMode::Mod)
      .value("Sub", ResetMode::Sub)
      .value("Zero", ResetMode::Zero);
  py::enum_<EventTimePolicy>(m, "EventTimePolicy")
      .value("GridSnap", EventTimePolicy::GridSnap)
      .value("SubsampleInterp", EventTimePolicy::SubsampleInterp);
  py::enum_<SparsityMode>(m, "SparsityMode")
      .value("SupNormSOD", SparsityMode::SupNormSOD)
      .value("AlexIF", SparsityMode::AlexIF);

  py::class_<Impulse>(m, "Impulse")
      .def(py::init<double, double>(), py::arg("time"), py::arg("weight"))
      .def_readwrite("time", &Impulse::time)
      .def_readwrite("weight", &Impulse::weight);

  py::class_<HybridSignal>(m, "HybridSignal")
      .def(py::init<>())
      .def_readwrite("t_start", &HybridSignal::t_start)
      .def_readwrite("t_end", &HybridSignal::t_end)
      .def_readwrite("dt", &HybridSignal::dt)
      .def_readwrite("samples", &HybridSignal::samples)
      .def_readwrite("impulses", &HybridSignal::impulses)
      .def("edge", &HybridSignal::edge)
      .def("validate", &HybridSignal::validate)
      .def("__len__", &HybridSignal::size);
  m.def("make_signal", &make_signal, py::arg("t_start"), py::arg("dt"), py::arg("samples"),
        py::arg("impulses") = std::vector<Impulse>{});

  py::class_<Spike>(m, "Spike")
      .def(py::init<double, double>(), py::arg("time"), py::arg("amplitude"))
      .def_readwrite("time", &Spike::time)
      .def_readwrite("amplitude", &Spike::amplitude);

  py::class_<SpikeTrain>(m, "SpikeTrain")
      .def(py::init<>())
      .def_readwrite("theta", &SpikeTrain::theta)
      .def_readwrite("spikes", &SpikeTrain::spikes)
      .def("__len__", &SpikeTrain::size);

  py::class_<StepFunction>(m, "StepFunction")
      .def_readonly("breakpoints", &StepFunction::breakpoints)
      .def_readonly("values", &StepFunction::values)
      .def("__call__", &StepFunction::operator());

  py::class_<PiecewiseLinear>(m, "PiecewiseLinear")
      .def_readonly("knots", &PiecewiseLinear::knots)
      .def("__call__", &PiecewiseLinear::operator());

  py::class_<IntegralFunction>(m, "IntegralFunction")
      .def("__call__", &IntegralFunction::operator())
      .def("value_before", &IntegralFunction::value_before)
      .def("edge_values", &IntegralFunction::edge_values);

  py::class_<EncoderConfig>(m, "EncoderConfig")
      .def(py::init<>())
      .def_readwrite("theta", &EncoderConfig::theta)
      .def_readwrite("reset", &EncoderConfig::reset)
      .def_readwrite("event_time_policy", &EncoderConfig::event_time_policy)
      .def_readwrite("eps", &EncoderConfig::eps);

  py::class_<SignalGrid>(m, "SignalGrid")
      .def(py::init<>())
      .def_readwrite("t_start", &SignalGrid::t_start)
      .def_readwrite("dt", &SignalGrid::dt)
      .def_readwrite("n", &SignalGrid::n);

  m.def("quantize_trunc", &quantize_trunc, py::arg("x"), py::arg("theta"),
        py::arg("eps") = 1e-12);
  m.def("accumulate", &accumulate);
  m.def("if_encode", &if_encode);
  m.def("sod_encode", &sod_encode, py::arg("g"), py::arg("theta"), py::arg("eps") = 1e-12);
  m.def("sod_of_integral", &sod_of_integral, py::arg("f"), py::arg("theta"),
        py::arg("eps") = 1e-12);
  m.def("sod_step_reconstruct", &sod_step_reconstruct, py::arg("s"), py::arg("t_end"),
        py::arg("t_start") = 0.0);
  m.def("sod_pwl_reconstruct", &sod_pwl_reconstruct, py::arg("s"), py::arg("t_end"),
        py::arg("t_start") = 0.0);
  m.def("if_mod_reconstruct", &if_mod_reconstruct);
  m.def("if_sub_reconstruct", &if_sub_reconstruct);
  m.def("grid_of", &grid_of);

  m.def("alexiewicz_norm_signal", &alexiewicz_norm_signal);
  m.def("alexiewicz_norm_spikes", &alexiewicz_norm_spikes);
  m.def("alexiewicz_distance", &alexiewicz_distance);
  m.def("l1_norm", &l1_norm);
  m.def("tv_norm", &tv_norm);
  m.def("sup_distance", &sup_distance);
  m.def("trains_equal", &trains_equal);

  py::class_<BoundCheck>(m, "BoundCheck")
      .def_readonly("distance", &BoundCheck::distance)
      .def_readonly("holds", &BoundCheck::holds);
  m.def("check_quantization_bound", &check_quantization_bound, py::arg("f"), py::arg("theta"),
        py::arg("eps") = 1e-12);

  py::class_<QuasiIsometryCheck>(m, "QuasiIsometryCheck")
      .def_readonly("lhs", &QuasiIsometryCheck::lhs)
      .def_readonly("rhs", &QuasiIsometryCheck::rhs)
      .def_readonly("holds", &QuasiIsometryCheck::holds);
  m.def("check_quasi_isometry", &check_quasi_isometry);

  py::class_<SparsityResult>(m, "SparsityResult")
      .def_readonly("min_l1", &SparsityResult::min_l1)
      .def_readonly("witness", &SparsityResult::witness)
      .def_readonly("unique", &SparsityResult::unique)
      .def_readonly("feasible", &SparsityResult::feasible);
  m.def("sparsity_oracle", &sparsity_oracle, py::arg("f"), py::arg("theta"), py::arg("mode"),
        py::arg("max_mult"), py::arg("cap") = 1e8);

  py::class_<RegularizationResult>(m, "RegularizationResult")
      .def_readonly("lambda_", &RegularizationResult::lambda)
      .def_readonly("u_grid", &RegularizationResult::u_grid)
      .def_readonly("alpha", &RegularizationResult::alpha)
      .def_readonly("beta", &RegularizationResult::beta)
      .def_readonly("l1", &RegularizationResult::l1)
      .def_readonly("objective", &RegularizationResult::objective)
      .def_readonly("u_min_objective", &RegularizationResult::u_min_objective)
      .def_readonly("u_fixed_point", &RegularizationResult::u_fixed_point)
      .def_readonly("fixed_point_found", &RegularizationResult::fixed_point_found)
      .def_readonly("alpha_nondecreasing", &RegularizationResult::alpha_nondecreasing)
      .def_readonly("l1_nonincreasing", &RegularizationResult::l1_nonincreasing);
  m.def("regularization_sweep", &regularization_sweep);
  m.def("if_regularization_sweep", &if_regularization_sweep);

  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("thresholds", &SweepResult::thresholds)
      .def_readonly("max_err_mod", &SweepResult::max_err_mod)
      .def_readonly("max_err_sub", &SweepResult::max_err_sub)
      .def_readonly("spike_count_mod", &SweepResult::spike_count_mod)
      .def_readonly("spike_count_sub", &SweepResult::spike_count_sub)
      .def_readonly("theta_star", &SweepResult::theta_star);
  m.def("threshold_sweep", &threshold_sweep);
}
