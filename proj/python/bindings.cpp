// Copyright 2026 The shorphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <string>

#include "shorphase/circuit.hpp"
#include "shorphase/classical_oracle.hpp"
#include "shorphase/errors.hpp"
#include "shorphase/phase_modexp.hpp"
#include "shorphase/postprocess.hpp"
#include "shorphase/report.hpp"
#include "shorphase/shor_driver.hpp"

namespace py = pybind11;
using namespace shorphase;

namespace {

// Python ints cross the boundary as decimal strings.
BigInt to_big(const py::int_& v) { return BigInt(std::string(py::str(v))); }

py::int_ from_big(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(v.str().c_str(), nullptr, 10));
}

std::string factor_json(std::uint64_t modulus, std::optional<std::uint64_t> base,
                        std::uint64_t shots, unsigned runs, std::uint64_t seed,
                        const std::string& policy, const std::string& backend,
                        std::optional<unsigned> lower_bits, bool gcd_shortcut,
                        unsigned jobs) {
  RunConfig cfg;
  cfg.modulus = modulus;
  cfg.base = base;
  cfg.shots = shots;
  cfg.runs = runs;
  cfg.seed = seed;
  cfg.policy = StopPolicy::parse(policy);
  cfg.backend = parse_backend(backend);
  cfg.lower_bits = lower_bits;
  cfg.gcd_shortcut = gcd_shortcut;
  cfg.jobs = jobs;
  FactorizationReport rep;
  {
    py::gil_scoped_release release;
    rep = run(cfg);
  }
  return report::serialize(report::make_document(rep, false));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Phase-based Shor factoring core";

  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);

  py::class_<CircuitSpec>(m, "CircuitSpec")
      .def_readonly("N", &CircuitSpec::modulus)
      .def_readonly("a", &CircuitSpec::base)
      .def_readonly("p", &CircuitSpec::upper_bits)
      .def_readonly("n", &CircuitSpec::lower_bits)
      .def_property_readonly("q", &CircuitSpec::q)
      .def_property_readonly("width", &CircuitSpec::width)
      .def("__repr__", [](const CircuitSpec& s) {
        return "CircuitSpec(N=" + std::to_string(s.modulus) +
               ", a=" + std::to_string(s.base) +
               ", p=" + std::to_string(s.upper_bits) +
               ", n=" + std::to_string(s.lower_bits) + ")";
      });

  py::class_<Circuit>(m, "Circuit")
      .def_property_readonly("width", &Circuit::width)
      .def("__len__", &Circuit::size)
      .def("to_text", [](const Circuit& c) { return to_text(c); })
      .def("stats", [](const Circuit& c) {
        const auto s = stats(c);
        py::dict d;
        d["width"] = s.width;
        d["gate_count"] = s.gate_count;
        d["depth"] = s.depth;
        return d;
      })
      .def("inverse", [](const Circuit& c) { return inverse(c); })
      .def("approx_equal",
           [](const Circuit& c, const Circuit& o, double tol) {
             return approx_equal(c, o, tol);
           },
           py::arg("other"), py::arg("tol") = 1e-12)
      .def(py::self == py::self);

  m.def("parse_circuit", [](const std::string& text) { return parse_circuit(text); });
  m.def("build_qft", &build_qft, py::arg("width"));
  m.def("build_iqft", &build_iqft, py::arg("width"));

  m.def("circuit_params", &circuit_params, py::arg("N"), py::arg("a"),
        py::arg("lower_bits") = py::none());
  m.def("phase_of", &phase_of, py::arg("a"), py::arg("N"));
  m.def("block_coefficient", &block_coefficient, py::arg("j"), py::arg("N"));
  m.def("quantize_phase", &quantize_phase, py::arg("phi"), py::arg("n"));
  m.def("build_shor_circuit",
        [](const CircuitSpec& spec) { return build_shor_circuit(spec).circuit; },
        py::arg("spec"));
  m.def("simulate_distribution",
        [](const CircuitSpec& spec) {
          py::gil_scoped_release release;
          return simulate_distribution(spec).probabilities;
        },
        py::arg("spec"));
  m.def("analytic_distribution",
        [](const CircuitSpec& spec) {
          return oracle::analytic_distribution(spec).probabilities;
        },
        py::arg("spec"));

  m.def("gcd", [](const py::int_& x, const py::int_& y) {
    return from_big(gcd(to_big(x), to_big(y)));
  });
  m.def("modpow", [](const py::int_& a, const py::int_& e, const py::int_& n) {
    return from_big(modpow(to_big(a), to_big(e), to_big(n)));
  });
  m.def("phase_to_l", [](double phase, const py::int_& n) {
    return from_big(phase_to_l(phase, to_big(n)));
  }, py::arg("phase"), py::arg("N"));
  m.def("postprocess",
        [](const py::int_& l, const py::int_& a, const py::int_& n) {
          py::set out;
          for (const auto& d : postprocess(to_big(l), to_big(a), to_big(n))) {
            out.add(from_big(d));
          }
          return out;
        },
        py::arg("l"), py::arg("a"), py::arg("N"));

  m.def("multiplicative_order", &oracle::multiplicative_order, py::arg("a"),
        py::arg("N"));
  m.def("trial_factor",
        [](std::uint64_t n) {
          const auto f = oracle::trial_factor(n);
          return py::make_tuple(f.prime_powers, f.divisors);
        },
        py::arg("N"));

  m.def("factor_json", &factor_json, py::arg("N"), py::arg("a") = py::none(),
        py::arg("shots") = 150, py::arg("runs") = 1, py::arg("seed") = 0,
        py::arg("policy") = "first", py::arg("backend") = "sim",
        py::arg("lower_bits") = py::none(), py::arg("gcd_shortcut") = false,
        py::arg("jobs") = 1);
}
