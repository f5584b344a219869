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

// JSON payloads for CLI reports. Message and control indices are printed
// 1-based.

#pragma once

#include <span>
#include <string_view>

#include "orthogate/capacity.hpp"
#include "orthogate/gate.hpp"
#include "orthogate/json_writer.hpp"
#include "orthogate/protocol.hpp"
#include "orthogate/symmetry.hpp"

namespace orthogate::cli {

json::Document header(std::string_view command, const ControlledGate& gate, double tol);

json::Document orthogonality_json(const OrthogonalityReport& report);
json::Document witness_json(const CommutationWitness& w);
json::Document symmetry_json(const SymmetryReport& report);
json::Document transcript_json(const ProtocolTranscript& t);
json::Document distinguishability_json(const Distinguishability& d);
json::Document constructed_json(const ConstructedStates& states,
                                std::span<const StateVector> eigenstates);
json::Document capacity_json(const CapacityResult& result, std::size_t necessary_bound);

}  // namespace orthogate::cli
