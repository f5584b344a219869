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

#include "orthogate/feasibility.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace orthogate {

namespace {

constexpr double kPivotEps = 1e-12;
constexpr int kMaxPivots = 10000;

}  // namespace

std::optional<RealVector> find_feasible_point(const RealMatrix& a, const RealVector& b,
                                              double tol) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index vars = a.cols();
  if (b.size() != rows) {
    throw DimensionError("find_feasible_point: b has length " + std::to_string(b.size()) +
                         ", expected " + std::to_string(rows));
  }
  if (rows == 0) return RealVector::Zero(vars);

  // Tableau [A | I | b] with the phase-1 cost row underneath.
  const Eigen::Index rhs = vars + rows;
  RealMatrix tab = RealMatrix::Zero(rows + 1, rhs + 1);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double sign = b[i] < 0.0 ? -1.0 : 1.0;
    tab.row(i).head(vars) = sign * a.row(i);
    tab(i, vars + i) = 1.0;
    tab(i, rhs) = sign * b[i];
  }
  for (Eigen::Index i = 0; i < rows; ++i) {
    tab.row(rows).head(vars) -= tab.row(i).head(vars);
    tab(rows, rhs) -= tab(i, rhs);
  }
  std::vector<Eigen::Index> basis(static_cast<std::size_t>(rows));
  for (Eigen::Index i = 0; i < rows; ++i) basis[static_cast<std::size_t>(i)] = vars + i;

  for (int pivot = 0; pivot < kMaxPivots; ++pivot) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < rhs; ++j) {
      if (tab(rows, j) < -kPivotEps) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    Eigen::Index leave = -1;
    double best_ratio = 0.0;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (tab(i, enter) <= kPivotEps) continue;
      const double ratio = tab(i, rhs) / tab(i, enter);
      if (leave < 0 || ratio < best_ratio - kPivotEps ||
          (ratio <= best_ratio + kPivotEps &&
           basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) break;  // unbounded direction; cannot happen in phase 1

    tab.row(leave) /= tab(leave, enter);
    for (Eigen::Index i = 0; i <= rows; ++i) {
      if (i != leave && tab(i, enter) != 0.0) tab.row(i) -= tab(i, enter) * tab.row(leave);
    }
    basis[static_cast<std::size_t>(leave)] = enter;
  }

  const double infeasibility = -tab(rows, rhs);
  if (infeasibility > tol) return std::nullopt;

  RealVector x = RealVector::Zero(vars);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Eigen::Index j = basis[static_cast<std::size_t>(i)];
    if (j < vars) x[j] = std::max(0.0, tab(i, rhs));
  }
  if (vars > 0 && (a * x - b).cwiseAbs().maxCoeff() > tol) return std::nullopt;
  if (vars == 0 && b.cwiseAbs().maxCoeff() > tol) return std::nullopt;
  return x;
}

}  // namespace orthogate
