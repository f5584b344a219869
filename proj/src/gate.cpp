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

#include "orthogate/gate.hpp"

#include <bit>
#include <cmath>
#include <random>

#include "orthogate/generators.hpp"

namespace orthogate {

namespace {

std::uint64_t fnv1a(std::uint64_t h, double x) {
  if (x == 0.0) x = 0.0;  // -0.0 and 0.0 hash alike
  const auto bits = std::bit_cast<std::uint64_t>(x);
  for (int byte = 0; byte < 8; ++byte) {
    h ^= (bits >> (8 * byte)) & 0xffU;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t fingerprint_of(const std::vector<ComplexMatrix>& unitaries) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a(h, static_cast<double>(unitaries.size()));
  for (const auto& u : unitaries) {
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
      for (Eigen::Index i = 0; i < u.rows(); ++i) {
        h = fnv1a(h, u(i, j).real());
        h = fnv1a(h, u(i, j).imag());
      }
    }
  }
  return h;
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

}  // namespace

OrthogonalityReport verify_orthogonal(std::span<const ComplexMatrix> unitaries,
                                      const StateVector& reference, double tol) {
  const auto n = static_cast<Eigen::Index>(unitaries.size());
  if (n == 0) throw DimensionError("verify_orthogonal: no unitaries");
  if (reference.size() != n) {
    throw DimensionError("verify_orthogonal: reference has length " +
                         std::to_string(reference.size()) + ", expected " + std::to_string(n));
  }
  OrthogonalityReport report;
  for (std::size_t i = 0; i < unitaries.size(); ++i) {
    const auto& u = unitaries[i];
    if (u.rows() != n || u.cols() != n) {
      throw DimensionError("verify_orthogonal: unitaries[" + std::to_string(i) + "] is " +
                           std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                           ", expected " + std::to_string(n) + "x" + std::to_string(n));
    }
    if (!is_unitary(u, tol)) {
      throw ValidationError("non-unitary: unitaries[" + std::to_string(i) + "]");
    }
    report.basis.push_back(u * reference);
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < report.basis.size(); ++i) {
    worst = std::max(worst, std::abs(report.basis[i].norm() - 1.0));
    for (std::size_t j = 0; j < report.basis.size(); ++j) {
      if (i != j) worst = std::max(worst, std::abs(report.basis[i].dot(report.basis[j])));
    }
  }
  report.worst_overlap_error = worst;
  report.holds = worst <= tol;
  return report;
}

ControlledGate::ControlledGate(std::string label, std::vector<ComplexMatrix> unitaries,
                               std::optional<StateVector> reference, double tol)
    : label_(std::move(label)), unitaries_(std::move(unitaries)), reference_(std::move(reference)) {
  const auto n = static_cast<Eigen::Index>(unitaries_.size());
  if (n == 0) throw ValidationError("gate has no controlled operations");
  for (std::size_t i = 0; i < unitaries_.size(); ++i) {
    const auto& u = unitaries_[i];
    if (u.rows() != n || u.cols() != n) {
      throw ValidationError("wrong dimensions: unitaries[" + std::to_string(i) + "] is " +
                            std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                            " but Bob's dimension must equal N = " + std::to_string(n));
    }
    if (!u.allFinite() || !is_unitary(u, tol)) {
      throw ValidationError("non-unitary: unitaries[" + std::to_string(i) + "]");
    }
  }
  if (reference_) {
    if (reference_->size() != n) {
      throw ValidationError("wrong dimensions: reference has length " +
                            std::to_string(reference_->size()) + ", expected " +
                            std::to_string(n));
    }
    if (!reference_->allFinite() || std::abs(reference_->norm() - 1.0) > tol) {
      throw ValidationError("reference state is not normalized");
    }
    const auto report = verify_orthogonal(unitaries_, *reference_, tol);
    if (!report.holds) {
      throw ValidationError("orthogonality failed: worst overlap error " +
                            std::to_string(report.worst_overlap_error));
    }
  }
  fingerprint_ = fingerprint_of(unitaries_);
}

ProductInput ProductInput::make(StateVector alice, StateVector bob, double tol) {
  if (std::abs(alice.norm() - 1.0) > tol) {
    throw PreconditionError("Alice's input is not normalized");
  }
  if (std::abs(bob.norm() - 1.0) > tol) {
    throw PreconditionError("Bob's input is not normalized");
  }
  return ProductInput{std::move(alice), std::move(bob)};
}

StateVector apply(const ControlledGate& gate, const ProductInput& input) {
  const auto n = static_cast<Eigen::Index>(gate.cardinality());
  if (input.alice.size() != n || input.bob.size() != n) {
    throw DimensionError("apply: inputs must have length " + std::to_string(n));
  }
  StateVector out(n * n);
  for (Eigen::Index a = 0; a < n; ++a) {
    out.segment(a * n, n) = input.alice[a] * (gate.unitary(static_cast<std::size_t>(a)) * input.bob);
  }
  return out;
}

StateVector basis_state(std::size_t n, std::size_t i) {
  StateVector e = StateVector::Zero(static_cast<Eigen::Index>(n));
  e[static_cast<Eigen::Index>(i)] = 1.0;
  return e;
}

ControlledGate cnot() {
  return ControlledGate("cnot", {ComplexMatrix::Identity(2, 2), pauli_x()}, basis_state(2, 0));
}

ControlledGate controlled_u(double alpha, cplx b, double tol) {
  if (std::abs(std::norm(b) - 1.0) > tol) {
    throw ValidationError("controlled-u requires |b|^2 = 1, got " + std::to_string(std::norm(b)));
  }
  ComplexMatrix u(2, 2);
  u << 0.0, b, std::conj(b), 0.0;
  u *= std::polar(1.0, alpha);
  return ControlledGate("controlled-u", {ComplexMatrix::Identity(2, 2), u}, basis_state(2, 0),
                        tol);
}

ControlledGate controlled_pauli() {
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  std::vector<ComplexMatrix> ops = {kron(id2, id2), kron(pauli_x(), id2), kron(pauli_y(), id2),
                                    kron(pauli_z(), id2)};
  StateVector bell = StateVector::Zero(4);
  bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
  return ControlledGate("controlled-pauli", std::move(ops), bell);
}

ControlledGate cprime(const std::optional<ComplexMatrix>& basis) {
  const ComplexMatrix lambda = basis.value_or(ComplexMatrix::Identity(4, 4));
  if (lambda.rows() != 4 || lambda.cols() != 4 || !is_unitary(lambda)) {
    throw ValidationError("cprime basis must be a 4x4 unitary (columns are the basis)");
  }
  // Row n holds the signs of C'_n on |lambda_1..4>.
  static constexpr int kSigns[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
  std::vector<ComplexMatrix> ops;
  for (const auto& row : kSigns) {
    ComplexMatrix c = ComplexMatrix::Zero(4, 4);
    for (Eigen::Index r = 0; r < 4; ++r) {
      c += static_cast<double>(row[r]) * lambda.col(r) * lambda.col(r).adjoint();
    }
    ops.push_back(std::move(c));
  }
  const StateVector reference = lambda.rowwise().sum() / 2.0;
  return ControlledGate("cprime", std::move(ops), reference);
}

namespace {

std::vector<ComplexMatrix> shift_operators(std::size_t n) {
  const auto dim = static_cast<Eigen::Index>(n);
  std::vector<ComplexMatrix> ops;
  for (Eigen::Index s = 0; s < dim; ++s) {
    ComplexMatrix c = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index m = 0; m < dim; ++m) c((s + m) % dim, m) = 1.0;
    ops.push_back(std::move(c));
  }
  return ops;
}

}  // namespace

ControlledGate shift(std::size_t n) {
  if (n < 1) throw ValidationError("shift requires N >= 1");
  return ControlledGate("shift", shift_operators(n), basis_state(n, 0));
}

ControlledGate shifted_u(std::size_t n, const ComplexMatrix& t) {
  if (n < 1) throw ValidationError("shifted-u requires N >= 1");
  const auto dim = static_cast<Eigen::Index>(n);
  if (t.rows() != dim || t.cols() != dim || !is_unitary(t)) {
    throw ValidationError("shifted-u requires an N x N unitary T");
  }
  auto ops = shift_operators(n);
  for (auto& c : ops) c = t * c;
  return ControlledGate("shifted-u", std::move(ops), basis_state(n, 0));
}

std::vector<std::string> catalog_names() {
  return {"cnot", "controlled-u", "controlled-pauli", "cprime", "shift", "shifted-u"};
}

ControlledGate catalog(std::string_view name, const CatalogParams& params, double tol) {
  if (name == "cnot") return cnot();
  if (name == "controlled-u") return controlled_u(params.alpha, params.b, tol);
  if (name == "controlled-pauli") return controlled_pauli();
  if (name == "cprime") return cprime(params.matrix);
  if (name == "shift") return shift(params.n);
  if (name == "shifted-u") {
    if (params.matrix) return shifted_u(params.n, *params.matrix);
    std::mt19937_64 rng(params.seed);
    return shifted_u(params.n, random_unitary(params.n, rng));
  }
  throw ValidationError("unknown gate name '" + std::string(name) + "'");
}

}  // namespace orthogate
