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

// Gate-spec documents:
//
//   {"label": "cnot", "N": 2,
//    "unitaries": [[[[1, 0], [0, 0]], [[0, 0], [1, 0]]], ...],
//    "reference": [[1, 0], [0, 0]]}
//
// Complex numbers are [re, im] pairs, matrices are row-major nested arrays,
// "reference" is optional.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "orthogate/gate.hpp"
#include "orthogate/json_writer.hpp"

namespace orthogate {

/// Parses and validates a gate-spec document. Syntax errors raise ParseError
/// with line and column; schema and gate-invariant violations raise
/// ValidationError whose message names the offending JSON pointer.
ControlledGate load_gate(std::string_view document, double tol = kDefaultTol);

/// Reads and parses a gate-spec file.
ControlledGate load_gate_file(const std::filesystem::path& path, double tol = kDefaultTol);

/// The gate-spec object for gate.
json::Document gate_document(const ControlledGate& gate);

/// Serializes gate as a gate-spec document, reals at 17 significant digits.
std::string save_gate(const ControlledGate& gate);

}  // namespace orthogate
