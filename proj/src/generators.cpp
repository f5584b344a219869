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

#include "orthogate/generators.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace orthogate {

ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  const auto dim = static_cast<Eigen::Index>(n);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix z(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) z(i, j) = cplx(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const cplx d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

RealMatrix dft_phase_table(std::size_t n) {
  const auto dim = static_cast<Eigen::Index>(n);
  RealMatrix phases(dim, dim);
  for (Eigen::Index a = 0; a < dim; ++a) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      phases(a, r) = wrap_phase(2.0 * std::numbers::pi * static_cast<double>((a * r) % dim) /
                                static_cast<double>(dim));
    }
  }
  return phases;
}

ControlledGate random_symmetric_gate(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw ValidationError("random_symmetric_gate requires N >= 1");
  const auto dim = static_cast<Eigen::Index>(n);
  std::mt19937_64 rng(seed);
  const ComplexMatrix t = random_unitary(n, rng);
  const ComplexMatrix w = random_unitary(n, rng);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  RealVector row_phase(dim), col_phase(dim);
  for (Eigen::Index i = 0; i < dim; ++i) row_phase[i] = angle(rng);
  for (Eigen::Index i = 0; i < dim; ++i) col_phase[i] = angle(rng);

  const RealMatrix table = dft_phase_table(n);
  std::vector<ComplexMatrix> ops;
  for (Eigen::Index a = 0; a < dim; ++a) {
    StateVector diag(dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
      diag[r] = std::polar(1.0, table(a, r) + row_phase[a] + col_phase[r]);
    }
    ops.push_back(t * w * diag.asDiagonal() * w.adjoint());
  }
  const StateVector reference = w * StateVector::Ones(dim) / std::sqrt(static_cast<double>(n));
  return ControlledGate("random-symmetric(n=" + std::to_string(n) + ",seed=" +
                            std::to_string(seed) + ")",
                        std::move(ops), reference);
}

ControlledGate random_orthogonal_gate(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw ValidationError("random_orthogonal_gate requires N >= 1");
  const auto dim = static_cast<Eigen::Index>(n);
  std::mt19937_64 rng(seed);
  const ComplexMatrix source = random_unitary(n, rng);  // column 0 is |R>
  const ComplexMatrix target = random_unitary(n, rng);  // columns are |n>
  std::vector<ComplexMatrix> ops;
  for (Eigen::Index a = 0; a < dim; ++a) {
    ComplexMatrix out = target;
    out.col(0).swap(out.col(a));
    ComplexMatrix mix = ComplexMatrix::Identity(dim, dim);
    if (dim > 1) mix.bottomRightCorner(dim - 1, dim - 1) = random_unitary(n - 1, rng);
    ops.push_back(out * mix * source.adjoint());
  }
  return ControlledGate("random-orthogonal(n=" + std::to_string(n) + ",seed=" +
                            std::to_string(seed) + ")",
                        std::move(ops), StateVector(source.col(0)));
}

}  // namespace orthogate
