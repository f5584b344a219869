// Copyright 2026 The orthogate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <optional>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orthogate/capacity.hpp"
#include "orthogate/errors.hpp"
#include "orthogate/gate.hpp"
#include "orthogate/gate_io.hpp"
#include "orthogate/generators.hpp"
#include "orthogate/matrix.hpp"
#include "orthogate/protocol.hpp"
#include "orthogate/symmetry.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace orthogate;

namespace {

std::optional<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, double>> witness_tuple(
    const std::optional<CommutationWitness>& w) {
  if (!w) return std::nullopt;
  return std::make_tuple(w->n, w->m, w->p, w->q, w->norm);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Symmetry, protocol and capacity analysis for orthogonal controlled gates";
  m.attr("DEFAULT_TOL") = kDefaultTol;

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DimensionError>(m, "DimensionError", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<CommutationError>(m, "CommutationError", error.ptr());
  py::register_exception<NumericalError>(m, "NumericalError", error.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<ProtocolUnavailable>(m, "ProtocolUnavailable", error.ptr());
  py::register_exception<InconsistencyError>(m, "InconsistencyError", error.ptr());

  m.def("is_unitary", &is_unitary, "m"_a, "tol"_a = kDefaultTol);
  m.def(
      "eig_unitary",
      [](const ComplexMatrix& u, double tol) {
        const EigenSystem es = eig_unitary(u, tol);
        return py::make_tuple(es.values, es.vectors);
      },
      "m"_a, "tol"_a = kDefaultTol, "Returns (eigenvalues, eigenvector columns).");
  m.def("gram", [](const std::vector<StateVector>& states) { return gram(states); }, "states"_a);

  py::class_<ControlledGate>(m, "ControlledGate")
      .def(py::init<std::string, std::vector<ComplexMatrix>, std::optional<StateVector>, double>(),
           "label"_a, "unitaries"_a, "reference"_a = std::nullopt, "tol"_a = kDefaultTol)
      .def_property_readonly("N", &ControlledGate::cardinality)
      .def_property_readonly("label", &ControlledGate::label)
      .def_property_readonly("unitaries", &ControlledGate::unitaries)
      .def_property_readonly("reference", &ControlledGate::reference)
      .def_property_readonly("fingerprint", &ControlledGate::fingerprint)
      .def("__repr__", [](const ControlledGate& g) {
        return "<ControlledGate '" + g.label() + "' N=" + std::to_string(g.cardinality()) + ">";
      });

  m.def("catalog_names", &catalog_names);
  m.def(
      "catalog",
      [](const std::string& name, std::size_t n, double alpha, cplx b, std::uint64_t seed,
         std::optional<ComplexMatrix> matrix, double tol) {
        CatalogParams p;
        p.n = n;
        p.alpha = alpha;
        p.b = b;
        p.seed = seed;
        p.matrix = std::move(matrix);
        return catalog(name, p, tol);
      },
      "name"_a, "n"_a = 3, "alpha"_a = 0.0, "b"_a = cplx{1.0, 0.0}, "seed"_a = 1,
      "matrix"_a = std::nullopt, "tol"_a = kDefaultTol);
  m.def("random_symmetric_gate", &random_symmetric_gate, "n"_a, "seed"_a);
  m.def("random_orthogonal_gate", &random_orthogonal_gate, "n"_a, "seed"_a);
  m.def("load_gate", [](const std::string& doc, double tol) { return load_gate(doc, tol); },
        "document"_a, "tol"_a = kDefaultTol);
  m.def("save_gate", &save_gate, "gate"_a);

  py::class_<OrthogonalityReport>(m, "OrthogonalityReport")
      .def_readonly("holds", &OrthogonalityReport::holds)
      .def_readonly("basis", &OrthogonalityReport::basis)
      .def_readonly("worst_overlap_error", &OrthogonalityReport::worst_overlap_error);
  m.def(
      "verify_orthogonal",
      [](const std::vector<ComplexMatrix>& us, const StateVector& ref, double tol) {
        return verify_orthogonal(us, ref, tol);
      },
      "unitaries"_a, "reference"_a, "tol"_a = kDefaultTol);

  m.def(
      "check_commuting",
      [](const ControlledGate& g, double tol) {
        const CommutingCheck c = check_commuting(g, tol);
        return py::make_tuple(c.commuting, witness_tuple(c.witness));
      },
      "gate"_a, "tol"_a = kDefaultTol,
      "Returns (commuting, witness) with witness (n, m, p, q, norm), 0-based, or None.");

  py::class_<SymmetryReport>(m, "SymmetryReport")
      .def_readonly("symmetric", &SymmetryReport::symmetric)
      .def_property_readonly("witness",
                             [](const SymmetryReport& r) { return witness_tuple(r.witness); })
      .def_readonly("eigenbasis", &SymmetryReport::eigenbasis)
      .def_readonly("phase_table", &SymmetryReport::phase_table)
      .def_readonly("T", &SymmetryReport::t)
      .def_readonly("C", &SymmetryReport::c)
      .def_readonly("gauge", &SymmetryReport::gauge)
      .def("phase_matrix", &SymmetryReport::phase_matrix);
  m.def("analyze", &analyze, "gate"_a, "tol"_a = kDefaultTol, "gauge"_a = std::nullopt);

  py::class_<ConstructedStates>(m, "ConstructedStates")
      .def_readonly("reference", &ConstructedStates::reference)
      .def_readonly("basis", &ConstructedStates::basis)
      .def_readonly("gamma", &ConstructedStates::gamma);
  m.def("construct_states", &construct_states, "report"_a, "gamma"_a, "tol"_a = kDefaultTol);
  m.def(
      "eigenstates_from_basis",
      [](const SymmetryReport& r, const std::vector<StateVector>& basis, const RealVector& gamma,
         double tol) { return eigenstates_from_basis(r, basis, gamma, tol); },
      "report"_a, "basis"_a, "gamma"_a, "tol"_a = kDefaultTol);

  py::class_<ProtocolTranscript>(m, "ProtocolTranscript")
      .def_property_readonly("direction",
                             [](const ProtocolTranscript& t) { return std::string(to_string(t.direction)); })
      .def_readonly("message", &ProtocolTranscript::message)
      .def_readonly("eta", &ProtocolTranscript::eta)
      .def_property_readonly("alice_input", [](const ProtocolTranscript& t) { return t.input.alice; })
      .def_property_readonly("bob_input", [](const ProtocolTranscript& t) { return t.input.bob; })
      .def_readonly("joint_output", &ProtocolTranscript::joint_output)
      .def_readonly("alice_output", &ProtocolTranscript::alice_output)
      .def_readonly("bob_output", &ProtocolTranscript::bob_output)
      .def_readonly("factorized", &ProtocolTranscript::factorized)
      .def_readonly("schmidt_max", &ProtocolTranscript::schmidt_max)
      .def_readonly("decoded", &ProtocolTranscript::decoded);
  m.def("run_forward", &run_forward, "gate"_a, "n"_a, "tol"_a = kDefaultTol);
  m.def(
      "run_reverse",
      [](const ControlledGate& g, const SymmetryReport& r, std::size_t msg,
         std::optional<std::vector<double>> eta, double tol) {
        const auto phases = eta.value_or(std::vector<double>(g.cardinality(), 0.0));
        return run_reverse(g, r, msg, phases, tol);
      },
      "gate"_a, "report"_a, "r"_a, "eta"_a = std::nullopt, "tol"_a = kDefaultTol);
  m.def(
      "attempt_reverse_general",
      [](const ControlledGate& g, const StateVector& a, const std::vector<StateVector>& bob,
         double tol) { return attempt_reverse_general(g, a, bob, tol); },
      "gate"_a, "a"_a, "bob_states"_a, "tol"_a = kDefaultTol);

  py::class_<Distinguishability>(m, "Distinguishability")
      .def_readonly("gram", &Distinguishability::gram)
      .def_readonly("max_deviation", &Distinguishability::max_deviation)
      .def_readonly("distinguishable", &Distinguishability::distinguishable);
  m.def(
      "check_distinguishability",
      [](const std::vector<ProtocolTranscript>& ts, double tol) {
        return check_distinguishability(ts, tol);
      },
      "transcripts"_a, "tol"_a = kDefaultTol);

  py::class_<CapacityResult>(m, "CapacityResult")
      .def_readonly("N_B", &CapacityResult::messages)
      .def_readonly("subset", &CapacityResult::subset)
      .def_readonly("shared_states", &CapacityResult::shared_states)
      .def_readonly("weights", &CapacityResult::weights)
      .def_readonly("xi_table", &CapacityResult::xi_table)
      .def_readonly("certificate", &CapacityResult::certificate)
      .def_readonly("certificate_check", &CapacityResult::certificate_check)
      .def_property_readonly("scope", [](const CapacityResult& r) { return std::string(r.scope); });
  m.def("max_reverse_messages", &max_reverse_messages, "gate"_a, "tol"_a = kDefaultTol);
  m.def("necessary_message_bound", &necessary_message_bound, "gate"_a, "tol"_a = kDefaultTol);
}
