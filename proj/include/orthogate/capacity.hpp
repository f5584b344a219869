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

// Zero-error reverse messaging for gates that are not symmetric.
//
// If Alice's amplitudes are supported on a set R of controls, Bob's inputs
// must be common eigenstates of every U_m^dagger U_n with n, m in R, so at
// most min(|R|, #common eigenstates) messages are possible. Given such
// eigenstates with relative phases xi_n(r), messages r and s separate iff
// sum_n p_n e^{i (xi_n(s) - xi_n(r))} = 0 for the weights p_n = |a_n|^2,
// a linear feasibility problem in p.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "orthogate/gate.hpp"
#include "orthogate/protocol.hpp"

namespace orthogate {

struct SharedEigenstates {
  /// Sorted, 0-based control indices.
  std::vector<std::size_t> subset;
  /// A maximal orthonormal set of common eigenvectors.
  std::vector<StateVector> states;
  /// xi(i, r): eigenphase of U_{subset[0]}^dagger U_{subset[i]} on states[r].
  /// Row 0 is zero.
  RealMatrix xi;
};

/// Common eigenvectors of {U_m^dagger U_n : n, m in subset}, found by
/// intersecting eigenspaces one product at a time (null space of
/// (V - lambda) Q with singular-value cutoff 1e-8). May be empty.
/// Throws DimensionError for an empty or out-of-range subset.
SharedEigenstates shared_eigenstates(const ControlledGate& gate,
                                     std::span<const std::size_t> subset,
                                     double tol = kDefaultTol);

struct Strategy {
  /// Indices into SharedEigenstates::states of Bob's k inputs.
  std::vector<std::size_t> chosen;
  /// p_n = |a_n|^2 over all N controls; zero outside the subset.
  RealVector weights;
};

/// Tries every k-subset of the shared states in lexicographic order and
/// returns the first one for which the weight feasibility problem has a
/// solution.
std::optional<Strategy> achievable(const ControlledGate& gate, const SharedEigenstates& shared,
                                   std::size_t k, double tol = kDefaultTol);

inline constexpr std::string_view kCapacityScope =
    "certified achievable maximum with Bob restricted to common eigenstates of the pairwise "
    "products on Alice's support and Alice to a single product input; completeness of this "
    "input class for arbitrary gates is not established";

struct CapacityResult {
  std::size_t messages = 0;  ///< N_B
  std::vector<std::size_t> subset;
  /// Bob's inputs, one per message.
  std::vector<StateVector> shared_states;
  /// p_n over all N controls.
  RealVector weights;
  /// xi_table(i, r) for subset[i] and shared_states[r].
  RealMatrix xi_table;
  std::vector<ProtocolTranscript> certificate;
  Distinguishability certificate_check;
  std::string_view scope = kCapacityScope;
};

/// Tolerance on the certificate Gram matrix.
double certificate_tolerance(double tol);

/// Searches k = N, N-1, ..., 1; for each k scans supports of size >= k
/// (largest first, lexicographic) and returns the first certified strategy.
/// Throws PreconditionError without a reference state and
/// InconsistencyError if a feasible strategy fails certification.
CapacityResult max_reverse_messages(const ControlledGate& gate, double tol = kDefaultTol);

/// max over supports R of min(|R|, number of common eigenstates on R): the
/// necessary-condition upper bound on N_B.
std::size_t necessary_message_bound(const ControlledGate& gate, double tol = kDefaultTol);

}  // namespace orthogate
