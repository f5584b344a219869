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

#include <optional>

#include "orthogate/matrix.hpp"

namespace orthogate {

inline constexpr double kFeasibilityTol = 1e-8;

/// Finds x >= 0 with A x = b using a dense phase-1 simplex (artificial
/// variables, Bland's rule). Returns nullopt when the minimal artificial
/// sum, or the residual ||A x - b||_inf of the recovered point, exceeds tol.
std::optional<RealVector> find_feasible_point(const RealMatrix& a, const RealVector& b,
                                              double tol = kFeasibilityTol);

}  // namespace orthogate
