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

#include "orthogate/gate_io.hpp"

#include <fstream>
#include <sstream>

namespace orthogate {

namespace {

using Json = nlohmann::json;

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what) {
  throw ValidationError("at " + (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

cplx read_complex(const Json& node, const std::string& pointer) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number()) {
    schema_error(pointer, "expected a complex number [re, im]");
  }
  return {node[0].get<double>(), node[1].get<double>()};
}

StateVector read_state(const Json& node, std::size_t n, const std::string& pointer) {
  if (!node.is_array()) schema_error(pointer, "expected an array of complex numbers");
  if (node.size() != n) {
    schema_error(pointer, "wrong dimensions: length " + std::to_string(node.size()) +
                              ", expected N = " + std::to_string(n));
  }
  StateVector v(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    v[static_cast<Eigen::Index>(i)] = read_complex(node[i], pointer + "/" + std::to_string(i));
  }
  return v;
}

ComplexMatrix read_matrix(const Json& node, std::size_t n, const std::string& pointer) {
  if (!node.is_array()) schema_error(pointer, "expected a row-major matrix");
  if (node.size() != n) {
    schema_error(pointer, "wrong dimensions: " + std::to_string(node.size()) +
                              " rows, expected N = " + std::to_string(n));
  }
  const auto dim = static_cast<Eigen::Index>(n);
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < n; ++i) {
    m.row(static_cast<Eigen::Index>(i)) =
        read_state(node[i], n, pointer + "/" + std::to_string(i)).transpose();
  }
  return m;
}

}  // namespace

ControlledGate load_gate(std::string_view document, double tol) {
  Json doc;
  try {
    doc = Json::parse(document.begin(), document.end());
  } catch (const Json::parse_error& e) {
    const auto [line, column] = line_and_column(document, e.byte);
    // nlohmann prefixes "[json.exception...] parse error at ...: "; keep the reason.
    std::string reason = e.what();
    if (const auto cut = reason.find(": "); cut != std::string::npos) reason.erase(0, cut + 2);
    throw ParseError("parse error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + reason,
                     line, column);
  }
  if (!doc.is_object()) schema_error("", "expected a JSON object");

  std::string label = "user-gate";
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) schema_error("/label", "expected a string");
    label = doc["label"].get<std::string>();
  }
  if (!doc.contains("N") || !doc["N"].is_number_integer() || doc["N"].get<long long>() < 1) {
    schema_error("/N", "expected a positive integer");
  }
  const auto n = static_cast<std::size_t>(doc["N"].get<long long>());
  if (!doc.contains("unitaries") || !doc["unitaries"].is_array()) {
    schema_error("/unitaries", "expected an array of N matrices");
  }
  const Json& ops = doc["unitaries"];
  if (ops.size() != n) {
    schema_error("/unitaries", "wrong dimensions: " + std::to_string(ops.size()) +
                                   " matrices, expected N = " + std::to_string(n));
  }
  std::vector<ComplexMatrix> unitaries;
  for (std::size_t i = 0; i < n; ++i) {
    unitaries.push_back(read_matrix(ops[i], n, "/unitaries/" + std::to_string(i)));
  }
  std::optional<StateVector> reference;
  if (doc.contains("reference") && !doc["reference"].is_null()) {
    reference = read_state(doc["reference"], n, "/reference");
  }
  return ControlledGate(std::move(label), std::move(unitaries), std::move(reference), tol);
}

ControlledGate load_gate_file(const std::filesystem::path& path, double tol) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open gate file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return load_gate(text.str(), tol);
}

json::Document gate_document(const ControlledGate& gate) {
  json::Document doc;
  doc["label"] = gate.label();
  doc["N"] = gate.cardinality();
  json::Document ops = json::Document::array();
  for (const auto& u : gate.unitaries()) ops.push_back(json::matrix(u));
  doc["unitaries"] = std::move(ops);
  if (gate.reference()) doc["reference"] = json::state(*gate.reference());
  return doc;
}

std::string save_gate(const ControlledGate& gate) {
  return json::dump(gate_document(gate)) + "\n";
}

}  // namespace orthogate
