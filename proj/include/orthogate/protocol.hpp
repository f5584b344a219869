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

// Single-use classical messaging through a controlled gate.
//
// Forward: Alice inputs |n>, Bob inputs the reference state and reads n off
// the orthogonal set U_n |R>.
// Reverse: Bob inputs the shared eigenstate |lambda_r>, Alice a uniform
// superposition N^{-1/2} sum_n e^{i eta_n} |n>; the output factorizes and
// Alice's factor N^{-1/2} sum_n e^{i (phi_n(r) + eta_n)} |n> identifies r.
//
// Message indices are 0-based.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orthogate/gate.hpp"
#include "orthogate/symmetry.hpp"

namespace orthogate {

enum class Direction { forward, reverse };

const char* to_string(Direction d) noexcept;

struct ProtocolTranscript {
  Direction direction = Direction::forward;
  std::size_t message = 0;
  /// Alice's input phases eta_n (reverse direction only).
  std::vector<double> eta;
  ProductInput input;
  StateVector joint_output;
  /// Factors of joint_output when it is a product state. bob_output has its
  /// dominant entry real and positive; the global phase sits on alice_output.
  std::optional<StateVector> alice_output;
  std::optional<StateVector> bob_output;
  bool factorized = false;
  /// Largest Schmidt coefficient of joint_output.
  double schmidt_max = 0.0;
  /// nullopt when no candidate reaches overlap^2 >= 1 - 10 tol.
  std::optional<std::size_t> decoded;
  std::uint64_t gate_fingerprint = 0;
};

/// Schmidt split of a bipartite pure state stored Alice-major.
struct Factorization {
  bool factorized = false;
  /// Schmidt coefficients, descending.
  RealVector coefficients;
  StateVector alice;
  StateVector bob;
};

/// Product iff the largest Schmidt coefficient is >= 1 - tol.
Factorization factorize(const StateVector& joint, std::size_t alice_dim, std::size_t bob_dim,
                        double tol = kDefaultTol);

/// Alice sends n. Throws PreconditionError if the gate has no reference
/// state, DimensionError if n is out of range.
ProtocolTranscript run_forward(const ControlledGate& gate, std::size_t n,
                               double tol = kDefaultTol);

/// Bob sends r. Throws ProtocolUnavailable for an asymmetric report, and
/// PreconditionError if the report was computed for a different gate.
ProtocolTranscript run_reverse(const ControlledGate& gate, const SymmetryReport& report,
                               std::size_t r, std::span<const double> eta,
                               double tol = kDefaultTol);

/// Alice's expected output for message r: N^{-1/2} sum_n e^{i (phi_n(r) + eta_n)} |n>.
StateVector reverse_alice_state(const SymmetryReport& report, std::size_t r,
                                std::span<const double> eta);

struct Distinguishability {
  /// Gram matrix of the Alice outputs; rows of non-factorized transcripts
  /// are zero.
  ComplexMatrix gram;
  double max_deviation = 0.0;  ///< ||G - I||_max
  bool distinguishable = false;
};

/// Throws PreconditionError when the transcripts come from different gates,
/// directions or eta vectors.
Distinguishability check_distinguishability(std::span<const ProtocolTranscript> transcripts,
                                            double tol = kDefaultTol);

/// Runs the gate on Alice's state a against each of Bob's candidate inputs
/// and records which outputs factorize. A message decodes when every output
/// factorizes and its Alice factor is orthogonal to all the others.
std::vector<ProtocolTranscript> attempt_reverse_general(const ControlledGate& gate,
                                                        const StateVector& a,
                                                        std::span<const StateVector> bob_states,
                                                        double tol = kDefaultTol);

}  // namespace orthogate
