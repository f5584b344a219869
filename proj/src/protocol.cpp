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

#include "orthogate/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace orthogate {

const char* to_string(Direction d) noexcept {
  return d == Direction::forward ? "forward" : "reverse";
}

Factorization factorize(const StateVector& joint, std::size_t alice_dim, std::size_t bob_dim,
                        double tol) {
  const auto rows = static_cast<Eigen::Index>(alice_dim);
  const auto cols = static_cast<Eigen::Index>(bob_dim);
  if (joint.size() != rows * cols) {
    throw DimensionError("factorize: joint state has length " + std::to_string(joint.size()) +
                         ", expected " + std::to_string(rows * cols));
  }
  ComplexMatrix m(rows, cols);
  for (Eigen::Index a = 0; a < rows; ++a) m.row(a) = joint.segment(a * cols, cols).transpose();

  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Factorization out;
  out.coefficients = svd.singularValues();
  // m = sum_k s_k u_k v_k^dagger, so joint = s_0 u_0 (x) conj(v_0) + ...
  StateVector alice = svd.matrixU().col(0);
  StateVector bob = svd.matrixV().col(0).conjugate();
  const StateVector canonical = canonical_phase(bob);
  const cplx shift = bob.dot(canonical);  // canonical = shift * bob
  out.bob = canonical;
  out.alice = alice * std::conj(shift);
  out.factorized = out.coefficients[0] >= 1.0 - tol;
  return out;
}

namespace {

std::optional<std::size_t> decode(const StateVector& received,
                                  std::span<const StateVector> candidates, double tol) {
  std::size_t best = 0;
  double best_overlap = -1.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double overlap = std::norm(candidates[i].dot(received));
    if (overlap > best_overlap) {
      best_overlap = overlap;
      best = i;
    }
  }
  if (best_overlap < 1.0 - 10.0 * tol) return std::nullopt;
  return best;
}

}  // namespace

ProtocolTranscript run_forward(const ControlledGate& gate, std::size_t n, double tol) {
  if (!gate.reference()) {
    throw PreconditionError("forward protocol needs a reference state; gate '" + gate.label() +
                            "' has none");
  }
  const std::size_t dim = gate.cardinality();
  if (n >= dim) {
    throw DimensionError("message " + std::to_string(n) + " out of range for N = " +
                         std::to_string(dim));
  }
  ProtocolTranscript t;
  t.direction = Direction::forward;
  t.message = n;
  t.gate_fingerprint = gate.fingerprint();
  t.input = ProductInput::make(basis_state(dim, n), *gate.reference(), tol);
  t.joint_output = apply(gate, t.input);

  const Factorization f = factorize(t.joint_output, dim, dim, tol);
  t.factorized = f.factorized;
  t.schmidt_max = f.coefficients[0];
  t.alice_output = f.alice;
  t.bob_output = f.bob;
  const auto basis = verify_orthogonal(gate.unitaries(), *gate.reference(), tol).basis;
  if (t.factorized) t.decoded = decode(f.bob, basis, tol);
  return t;
}

StateVector reverse_alice_state(const SymmetryReport& report, std::size_t r,
                                std::span<const double> eta) {
  const auto dim = static_cast<Eigen::Index>(report.cardinality());
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  StateVector psi(dim);
  for (Eigen::Index a = 0; a < dim; ++a) {
    psi[a] = std::polar(scale, report.phase_table(a, static_cast<Eigen::Index>(r)) +
                                   eta[static_cast<std::size_t>(a)]);
  }
  return psi;
}

ProtocolTranscript run_reverse(const ControlledGate& gate, const SymmetryReport& report,
                               std::size_t r, std::span<const double> eta, double tol) {
  if (!report.symmetric) {
    throw ProtocolUnavailable("gate '" + gate.label() +
                              "' is not symmetric: its pairwise products do not commute, so "
                              "Bob cannot send N messages back");
  }
  if (report.gate_fingerprint != gate.fingerprint()) {
    throw PreconditionError("run_reverse: symmetry report belongs to a different gate");
  }
  const std::size_t dim = gate.cardinality();
  if (r >= dim) {
    throw DimensionError("message " + std::to_string(r) + " out of range for N = " +
                         std::to_string(dim));
  }
  if (eta.size() != dim) {
    throw DimensionError("run_reverse: eta has length " + std::to_string(eta.size()) +
                         ", expected " + std::to_string(dim));
  }

  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  StateVector alice(static_cast<Eigen::Index>(dim));
  for (std::size_t a = 0; a < dim; ++a) {
    alice[static_cast<Eigen::Index>(a)] = std::polar(scale, eta[a]);
  }

  ProtocolTranscript t;
  t.direction = Direction::reverse;
  t.message = r;
  t.eta.assign(eta.begin(), eta.end());
  t.gate_fingerprint = gate.fingerprint();
  t.input = ProductInput::make(std::move(alice),
                               report.eigenbasis.col(static_cast<Eigen::Index>(r)), tol);
  t.joint_output = apply(gate, t.input);

  const Factorization f = factorize(t.joint_output, dim, dim, tol);
  t.factorized = f.factorized;
  t.schmidt_max = f.coefficients[0];
  if (t.factorized) {
    t.alice_output = f.alice;
    t.bob_output = f.bob;
    std::vector<StateVector> candidates;
    for (std::size_t s = 0; s < dim; ++s) candidates.push_back(reverse_alice_state(report, s, eta));
    t.decoded = decode(f.alice, candidates, tol);
  }
  return t;
}

Distinguishability check_distinguishability(std::span<const ProtocolTranscript> transcripts,
                                            double tol) {
  Distinguishability out;
  if (transcripts.empty()) {
    out.distinguishable = true;
    return out;
  }
  const auto& first = transcripts.front();
  std::vector<StateVector> states;
  for (const auto& t : transcripts) {
    if (t.gate_fingerprint != first.gate_fingerprint) {
      throw PreconditionError("check_distinguishability: transcripts come from different gates");
    }
    if (t.direction != first.direction || t.eta != first.eta) {
      throw PreconditionError(
          "check_distinguishability: transcripts use different directions or eta phases");
    }
    states.push_back(t.alice_output.value_or(StateVector::Zero(t.input.alice.size())));
  }
  out.gram = gram(states);
  out.max_deviation =
      max_abs(out.gram - ComplexMatrix::Identity(out.gram.rows(), out.gram.cols()));
  out.distinguishable = out.max_deviation <= tol;
  return out;
}

std::vector<ProtocolTranscript> attempt_reverse_general(const ControlledGate& gate,
                                                        const StateVector& a,
                                                        std::span<const StateVector> bob_states,
                                                        double tol) {
  const std::size_t dim = gate.cardinality();
  if (static_cast<std::size_t>(a.size()) != dim) {
    throw DimensionError("attempt_reverse_general: Alice's amplitudes have length " +
                         std::to_string(a.size()) + ", expected " + std::to_string(dim));
  }
  std::vector<double> eta;
  for (Eigen::Index i = 0; i < a.size(); ++i) eta.push_back(std::arg(a[i]));

  std::vector<ProtocolTranscript> out;
  for (std::size_t r = 0; r < bob_states.size(); ++r) {
    ProtocolTranscript t;
    t.direction = Direction::reverse;
    t.message = r;
    t.eta = eta;
    t.gate_fingerprint = gate.fingerprint();
    t.input = ProductInput::make(a, bob_states[r], tol);
    t.joint_output = apply(gate, t.input);
    const Factorization f = factorize(t.joint_output, dim, dim, tol);
    t.factorized = f.factorized;
    t.schmidt_max = f.coefficients[0];
    if (t.factorized) {
      t.alice_output = f.alice;
      t.bob_output = f.bob;
    }
    out.push_back(std::move(t));
  }

  const bool all_factorized =
      std::all_of(out.begin(), out.end(), [](const ProtocolTranscript& t) { return t.factorized; });
  if (!all_factorized) return out;
  for (std::size_t r = 0; r < out.size(); ++r) {
    bool separated = true;
    for (std::size_t s = 0; s < out.size() && separated; ++s) {
      if (s == r) continue;
      separated = std::norm(out[r].alice_output->dot(*out[s].alice_output)) <= 10.0 * tol;
    }
    if (separated) out[r].decoded = r;
  }
  return out;
}

}  // namespace orthogate
