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

// Symmetry of orthogonal controlled gates.
//
// An orthogonal gate is symmetric (Bob can send N messages back to Alice)
// exactly when all pairwise products U_n^dagger U_m commute. Equivalently
// U_n = T C_n with T unitary and the C_n commuting. For a symmetric gate the
// products share an eigenbasis |lambda_r>, U_1^dagger U_n |lambda_r> =
// e^{i phi_n(r)} |lambda_r>, and the normalized phase vectors
// v_r(n) = e^{i phi_n(r)} / sqrt(N) form a unitary matrix.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "orthogate/gate.hpp"

namespace orthogate {

/// Indices (0-based) of a quadruple with
/// (U_n^dagger U_m)(U_p^dagger U_q) != (U_p^dagger U_q)(U_n^dagger U_m).
struct CommutationWitness {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t p = 0;
  std::size_t q = 0;
  double norm = 0.0;
};

struct CommutingCheck {
  bool commuting = true;
  /// The first violation in lexicographic (n, m, p, q) order.
  std::optional<CommutationWitness> witness;
};

/// Scans every quadruple of pairwise products.
CommutingCheck check_commuting(const ControlledGate& gate, double tol = kDefaultTol);

struct SymmetryReport {
  bool symmetric = false;
  std::optional<CommutationWitness> witness;

  // Populated only when symmetric.

  /// Columns |lambda_r>.
  ComplexMatrix eigenbasis;
  /// phase_table(n, r) = phi_n(r), with row 0 identically zero.
  RealMatrix phase_table;
  ComplexMatrix t;
  std::vector<ComplexMatrix> c;
  /// Gauge phases w_r used to split U_n = T C_n.
  RealVector gauge;

  /// The analysed operators and their fingerprint.
  std::vector<ComplexMatrix> unitaries;
  std::uint64_t gate_fingerprint = 0;

  std::size_t cardinality() const noexcept { return unitaries.size(); }
  /// M(r, n) = e^{i phi_n(r)} / sqrt(N).
  ComplexMatrix phase_matrix() const;
};

/// Decides symmetry and, for symmetric gates, extracts the shared
/// eigenbasis, the eigenphase table and the factorization
/// T = U_1 sum_r e^{-i w_r} |lambda_r><lambda_r|,
/// C_n = sum_r e^{i (phi_n(r) + w_r)} |lambda_r><lambda_r|.
///
/// The default gauge is w = 0, giving T = U_1 and C_1 = I. Eigenbasis
/// columns are ordered by the dominant entry of |lambda_r>, then by the
/// phase row.
///
/// Throws ValidationError when the products commute but the phase matrix is
/// not unitary (no reference state can make the operators orthogonal), and
/// NumericalError when the factorization residual exceeds tol.
SymmetryReport analyze(const ControlledGate& gate, double tol = kDefaultTol,
                       const std::optional<RealVector>& gauge = std::nullopt);

struct ConstructedStates {
  StateVector reference;
  std::vector<StateVector> basis;
  RealVector gamma;
};

/// |R> = N^{-1/2} sum_r e^{-i gamma_r} |lambda_r> and
/// |n> = N^{-1/2} sum_r e^{i (phi_n(r) - gamma_r)} U_1 |lambda_r>.
/// Throws PreconditionError for an asymmetric report and NumericalError if
/// the constructed reference fails the orthogonality check.
ConstructedStates construct_states(const SymmetryReport& report, const RealVector& gamma,
                                   double tol = kDefaultTol);

/// Inverts the construction:
/// |lambda_r> = U_1^dagger N^{-1/2} e^{i gamma_r} sum_n e^{-i phi_n(r)} |n>.
/// Throws NumericalError if the recovered vectors differ from the report's
/// eigenbasis, after one global phase common to all of them, by more than tol.
std::vector<StateVector> eigenstates_from_basis(const SymmetryReport& report,
                                                std::span<const StateVector> basis,
                                                const RealVector& gamma,
                                                double tol = kDefaultTol);

}  // namespace orthogate
