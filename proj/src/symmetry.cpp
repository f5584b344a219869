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

#include "orthogate/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace orthogate {

CommutingCheck check_commuting(const ControlledGate& gate, double tol) {
  const std::size_t n = gate.cardinality();
  const auto& u = gate.unitaries();
  std::vector<ComplexMatrix> products;  // products[a * n + b] = U_a^dagger U_b
  products.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) products.push_back(u[a].adjoint() * u[b]);
  }
  // The relation is symmetric in the two pairs, so the lexicographically
  // first violating quadruple has its first pair strictly smaller.
  CommutingCheck result;
  for (std::size_t i = 0; i < products.size(); ++i) {
    for (std::size_t j = i + 1; j < products.size(); ++j) {
      const double norm = commutator_norm(products[i], products[j]);
      if (norm > tol) {
        result.commuting = false;
        result.witness = CommutationWitness{i / n, i % n, j / n, j % n, norm};
        return result;
      }
    }
  }
  return result;
}

ComplexMatrix SymmetryReport::phase_matrix() const {
  const auto n = phase_table.rows();
  ComplexMatrix m(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index a = 0; a < n; ++a) m(r, a) = std::polar(scale, phase_table(a, r));
  }
  return m;
}

SymmetryReport analyze(const ControlledGate& gate, double tol,
                       const std::optional<RealVector>& gauge) {
  const std::size_t n = gate.cardinality();
  const auto dim = static_cast<Eigen::Index>(n);
  SymmetryReport report;
  report.unitaries = gate.unitaries();
  report.gate_fingerprint = gate.fingerprint();

  const CommutingCheck check = check_commuting(gate, tol);
  if (!check.commuting) {
    report.witness = check.witness;
    return report;
  }

  const ComplexMatrix& pivot = gate.unitary(0);
  std::vector<ComplexMatrix> family;
  family.reserve(n);
  for (const auto& u : gate.unitaries()) family.push_back(pivot.adjoint() * u);

  SharedEigenbasis shared;
  try {
    shared = simultaneous_eigenbasis(family, tol);
  } catch (const CommutationError& e) {
    report.witness = CommutationWitness{0, e.first(), 0, e.second(), e.norm()};
    return report;
  }

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return dominant_index(shared.vectors.col(a)) < dominant_index(shared.vectors.col(b));
  });
  report.eigenbasis.resize(dim, dim);
  report.phase_table.resize(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const Eigen::Index src = order[static_cast<std::size_t>(r)];
    report.eigenbasis.col(r) = shared.vectors.col(src);
    report.phase_table.col(r) = shared.phases.col(src);
  }
  report.phase_table.row(0).setZero();

  if (!is_unitary(report.phase_matrix(), std::max(tol, 1e-12) * 10.0)) {
    throw ValidationError(
        "pairwise products commute but the eigenphase table is not unitary; "
        "no reference state makes these operators orthogonal");
  }

  report.gauge = gauge.value_or(RealVector::Zero(dim));
  if (report.gauge.size() != dim) {
    throw DimensionError("analyze: gauge has length " + std::to_string(report.gauge.size()) +
                         ", expected " + std::to_string(n));
  }

  const ComplexMatrix& v = report.eigenbasis;
  StateVector t_diag(dim);
  for (Eigen::Index r = 0; r < dim; ++r) t_diag[r] = std::polar(1.0, -report.gauge[r]);
  report.t = pivot * v * t_diag.asDiagonal() * v.adjoint();

  double worst = 0.0;
  for (Eigen::Index a = 0; a < dim; ++a) {
    StateVector c_diag(dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
      c_diag[r] = std::polar(1.0, report.phase_table(a, r) + report.gauge[r]);
    }
    report.c.push_back(v * c_diag.asDiagonal() * v.adjoint());
    worst = std::max(worst, max_abs(gate.unitary(static_cast<std::size_t>(a)) -
                                    report.t * report.c.back()));
  }
  if (worst > 10.0 * tol) {
    throw NumericalError("analyze: factorization residual " + std::to_string(worst) +
                         " exceeds tolerance");
  }
  report.symmetric = true;
  return report;
}

ConstructedStates construct_states(const SymmetryReport& report, const RealVector& gamma,
                                   double tol) {
  if (!report.symmetric) {
    throw PreconditionError("construct_states: gate is not symmetric");
  }
  const auto dim = static_cast<Eigen::Index>(report.cardinality());
  if (gamma.size() != dim) {
    throw DimensionError("construct_states: gamma has length " + std::to_string(gamma.size()) +
                         ", expected " + std::to_string(dim));
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  const ComplexMatrix image = report.unitaries.front() * report.eigenbasis;  // U_1 |lambda_r>

  ConstructedStates out;
  out.gamma = gamma;
  out.reference = StateVector::Zero(dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    out.reference += std::polar(scale, -gamma[r]) * report.eigenbasis.col(r);
  }
  for (Eigen::Index a = 0; a < dim; ++a) {
    StateVector state = StateVector::Zero(dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
      state += std::polar(scale, report.phase_table(a, r) - gamma[r]) * image.col(r);
    }
    out.basis.push_back(std::move(state));
  }

  const OrthogonalityReport check = verify_orthogonal(report.unitaries, out.reference, tol);
  if (!check.holds) {
    throw NumericalError("construct_states: constructed reference fails orthogonality (error " +
                         std::to_string(check.worst_overlap_error) + ")");
  }
  for (std::size_t a = 0; a < out.basis.size(); ++a) {
    if (max_abs(out.basis[a] - check.basis[a]) > tol) {
      throw NumericalError("construct_states: basis state " + std::to_string(a) +
                           " disagrees with U_n |R>");
    }
  }
  return out;
}

std::vector<StateVector> eigenstates_from_basis(const SymmetryReport& report,
                                                std::span<const StateVector> basis,
                                                const RealVector& gamma, double tol) {
  if (!report.symmetric) {
    throw PreconditionError("eigenstates_from_basis: gate is not symmetric");
  }
  const auto dim = static_cast<Eigen::Index>(report.cardinality());
  if (static_cast<Eigen::Index>(basis.size()) != dim || gamma.size() != dim) {
    throw DimensionError("eigenstates_from_basis: expected " + std::to_string(dim) +
                         " basis states and phases");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  const ComplexMatrix pivot_inverse = report.unitaries.front().adjoint();

  std::vector<StateVector> out;
  cplx overlap = 0.0;
  for (Eigen::Index r = 0; r < dim; ++r) {
    StateVector sum = StateVector::Zero(dim);
    for (Eigen::Index a = 0; a < dim; ++a) {
      if (basis[static_cast<std::size_t>(a)].size() != dim) {
        throw DimensionError("eigenstates_from_basis: basis state has wrong length");
      }
      sum += std::polar(1.0, -report.phase_table(a, r)) * basis[static_cast<std::size_t>(a)];
    }
    out.push_back(pivot_inverse * (std::polar(scale, gamma[r]) * sum));
    overlap += out.back().dot(report.eigenbasis.col(r));
  }
  // One phase for the whole set: a gamma mismatch rotates each vector
  // differently and must not be absorbed.
  const cplx phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : cplx{1.0};
  for (Eigen::Index r = 0; r < dim; ++r) {
    const double residual =
        max_abs(report.eigenbasis.col(r) - phase * out[static_cast<std::size_t>(r)]);
    if (residual > tol) {
      throw NumericalError("eigenstates_from_basis: eigenstate " + std::to_string(r) +
                           " not recovered (residual " + std::to_string(residual) +
                           "); basis and gamma do not match");
    }
  }
  return out;
}

}  // namespace orthogate
