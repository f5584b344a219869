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

// Controlled two-party gates: Alice's basis state |n> selects the unitary
// U_n applied to Bob's N-dimensional system.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orthogate/matrix.hpp"

namespace orthogate {

/// Result of checking that U_n |R> form an orthonormal set.
struct OrthogonalityReport {
  bool holds = false;
  /// basis[n] = U_n |R>.
  std::vector<StateVector> basis;
  /// max of max_{m != n} |<basis[m]|basis[n]>| and max_n | ||basis[n]|| - 1 |.
  double worst_overlap_error = 0.0;
};

/// Runs the orthogonality check. Throws DimensionError on shape mismatch and
/// ValidationError naming a non-unitary member.
OrthogonalityReport verify_orthogonal(std::span<const ComplexMatrix> unitaries,
                                      const StateVector& reference,
                                      double tol = kDefaultTol);

/// A controlled gate of cardinality N. Alice's and Bob's dimensions both
/// equal N. Instances are validated on construction and immutable afterwards.
class ControlledGate {
 public:
  /// Throws ValidationError if a member is not N x N and unitary, if the
  /// reference is not a unit vector of length N, or if the reference does
  /// not produce an orthonormal set.
  ControlledGate(std::string label, std::vector<ComplexMatrix> unitaries,
                 std::optional<StateVector> reference = std::nullopt,
                 double tol = kDefaultTol);

  std::size_t cardinality() const noexcept { return unitaries_.size(); }
  std::size_t alice_dim() const noexcept { return unitaries_.size(); }
  std::size_t bob_dim() const noexcept { return unitaries_.size(); }

  const std::string& label() const noexcept { return label_; }
  const std::vector<ComplexMatrix>& unitaries() const noexcept { return unitaries_; }
  const ComplexMatrix& unitary(std::size_t n) const { return unitaries_.at(n); }
  const std::optional<StateVector>& reference() const noexcept { return reference_; }

  /// Hash of the operator entries; equal gates have equal fingerprints.
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

 private:
  std::string label_;
  std::vector<ComplexMatrix> unitaries_;
  std::optional<StateVector> reference_;
  std::uint64_t fingerprint_ = 0;
};

/// Product input |psi>_A |phi>_B = sum_n a_n |n>_A sum_m b_m |m>_B.
struct ProductInput {
  StateVector alice;
  StateVector bob;

  /// Throws PreconditionError unless both vectors have unit norm within tol.
  static ProductInput make(StateVector alice, StateVector bob, double tol = kDefaultTol);
};

/// Gate action on a product input. The joint state is Alice-major:
/// entry n * N + m holds a_n (U_n b)_m.
StateVector apply(const ControlledGate& gate, const ProductInput& input);

/// Basis vector e_i of length n.
StateVector basis_state(std::size_t n, std::size_t i);

// Built-in gates.

/// {I, sigma_x} with reference |0>.
ControlledGate cnot();

/// {I, e^{i alpha} [[0, b], [b*, 0]]} with reference |0>; alpha = 0, b = 1 is
/// the CNOT. Every unitary anticommuting with sigma_z has this form. Throws
/// ValidationError if |b|^2 differs from 1 by more than tol.
ControlledGate controlled_u(double alpha, cplx b, double tol = kDefaultTol);

/// {I(x)I, sigma_x(x)I, sigma_y(x)I, sigma_z(x)I} on Bob's two qubits taken as
/// one 4-dimensional system, reference (|00> + |11>)/sqrt(2).
ControlledGate controlled_pauli();

/// Four commuting +-1 operators diagonal in the columns of basis (identity by
/// default), reference (1/2) sum_r |lambda_r>.
ControlledGate cprime(const std::optional<ComplexMatrix>& basis = std::nullopt);

/// Cyclic shifts C''_n |m> = |(n + m) mod N> (0-based), reference |0>.
ControlledGate shift(std::size_t n);

/// {T C''_n} with reference |0>.
ControlledGate shifted_u(std::size_t n, const ComplexMatrix& t);

/// Parameters for catalog lookup by name. Unused fields are ignored.
struct CatalogParams {
  std::size_t n = 3;
  double alpha = 0.0;
  cplx b = 1.0;
  std::uint64_t seed = 1;
  std::optional<ComplexMatrix> matrix;  ///< cprime basis or shifted-u T
};

/// Names accepted by catalog(): cnot, controlled-u, controlled-pauli,
/// cprime, shift, shifted-u.
std::vector<std::string> catalog_names();

/// Builds a named gate. shifted-u without an explicit T draws a random
/// unitary from params.seed. Throws ValidationError for an unknown name.
ControlledGate catalog(std::string_view name, const CatalogParams& params = {},
                       double tol = kDefaultTol);

}  // namespace orthogate
