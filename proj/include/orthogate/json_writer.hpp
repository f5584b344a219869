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

#pragma once

#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "orthogate/matrix.hpp"

namespace orthogate::json {

using Document = nlohmann::ordered_json;

/// Serializes with every floating-point value printed at 17 significant
/// digits, keys in insertion order. indent < 0 gives a single line.
std::string dump(const Document& doc, int indent = 2);

/// [re, im]
Document complex_value(cplx z);
/// [[re, im], ...]
Document state(const StateVector& v);
/// Row-major [[[re, im], ...], ...]
Document matrix(const ComplexMatrix& m);
/// Row-major [[x, ...], ...]
Document real_matrix(const RealMatrix& m);
Document real_vector(const RealVector& v);

}  // namespace orthogate::json
