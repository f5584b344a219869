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

#include "cli/report.hpp"

#include <cstdio>
#include <string>

#ifndef ORTHOGATE_VERSION
#define ORTHOGATE_VERSION "0.0.0"
#endif

namespace orthogate::cli {

namespace {

json::Document states_json(std::span<const StateVector> states) {
  json::Document out = json::Document::array();
  for (const auto& s : states) out.push_back(json::state(s));
  return out;
}

json::Document optional_index(const std::optional<std::size_t>& i) {
  if (!i) return nullptr;
  return *i + 1;
}

std::string hex(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

json::Document header(std::string_view command, const ControlledGate& gate, double tol) {
  json::Document doc = json::Document::object();
  doc["command"] = command;
  doc["tool_version"] = ORTHOGATE_VERSION;
  doc["gate_label"] = gate.label();
  doc["gate_fingerprint"] = hex(gate.fingerprint());
  doc["N"] = gate.cardinality();
  doc["tolerance"] = tol;
  return doc;
}

json::Document orthogonality_json(const OrthogonalityReport& report) {
  json::Document doc = json::Document::object();
  doc["holds"] = report.holds;
  doc["worst_overlap_error"] = report.worst_overlap_error;
  doc["basis"] = states_json(report.basis);
  return doc;
}

json::Document witness_json(const CommutationWitness& w) {
  json::Document doc = json::Document::object();
  doc["n"] = w.n + 1;
  doc["m"] = w.m + 1;
  doc["p"] = w.p + 1;
  doc["q"] = w.q + 1;
  doc["commutator_norm"] = w.norm;
  return doc;
}

json::Document symmetry_json(const SymmetryReport& report) {
  json::Document doc = json::Document::object();
  doc["symmetric"] = report.symmetric;
  if (!report.symmetric) {
    doc["witness"] = report.witness ? witness_json(*report.witness) : json::Document(nullptr);
    return doc;
  }
  doc["eigenbasis"] = json::matrix(report.eigenbasis);
  doc["phase_table"] = json::real_matrix(report.phase_table);
  doc["phase_matrix"] = json::matrix(report.phase_matrix());
  doc["gauge"] = json::real_vector(report.gauge);
  doc["T"] = json::matrix(report.t);
  json::Document c = json::Document::array();
  for (const auto& m : report.c) c.push_back(json::matrix(m));
  doc["C"] = std::move(c);
  return doc;
}

json::Document transcript_json(const ProtocolTranscript& t) {
  json::Document doc = json::Document::object();
  doc["direction"] = to_string(t.direction);
  doc["message"] = t.message + 1;
  if (t.direction == Direction::reverse) doc["eta"] = t.eta;
  doc["input"] = {{"alice", json::state(t.input.alice)}, {"bob", json::state(t.input.bob)}};
  doc["joint_output"] = json::state(t.joint_output);
  doc["factorized"] = t.factorized;
  doc["schmidt_max"] = t.schmidt_max;
  doc["alice_output"] = t.alice_output ? json::state(*t.alice_output) : json::Document(nullptr);
  doc["bob_output"] = t.bob_output ? json::state(*t.bob_output) : json::Document(nullptr);
  doc["decoded"] = optional_index(t.decoded);
  return doc;
}

json::Document distinguishability_json(const Distinguishability& d) {
  json::Document doc = json::Document::object();
  doc["distinguishable"] = d.distinguishable;
  doc["max_deviation"] = d.max_deviation;
  doc["gram"] = json::matrix(d.gram);
  return doc;
}

json::Document constructed_json(const ConstructedStates& states,
                                std::span<const StateVector> eigenstates) {
  json::Document doc = json::Document::object();
  doc["gamma"] = json::real_vector(states.gamma);
  doc["reference"] = json::state(states.reference);
  doc["basis"] = states_json(states.basis);
  doc["eigenstates"] = states_json(eigenstates);
  return doc;
}

json::Document capacity_json(const CapacityResult& result, std::size_t necessary_bound) {
  json::Document doc = json::Document::object();
  doc["N_B"] = result.messages;
  doc["necessary_bound"] = necessary_bound;
  json::Document subset = json::Document::array();
  for (std::size_t i : result.subset) subset.push_back(i + 1);
  doc["subset"] = std::move(subset);
  doc["weights"] = json::real_vector(result.weights);
  doc["shared_states"] = states_json(result.shared_states);
  doc["xi_table"] = json::real_matrix(result.xi_table);
  json::Document cert = distinguishability_json(result.certificate_check);
  json::Document decoded = json::Document::array();
  for (const auto& t : result.certificate) decoded.push_back(optional_index(t.decoded));
  cert["decoded"] = std::move(decoded);
  doc["certificate"] = std::move(cert);
  doc["scope"] = result.scope;
  return doc;
}

}  // namespace orthogate::cli
