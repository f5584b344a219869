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

// Dense complex linear algebra for the small (N <= 16) operators that
// describe a controlled gate: unitarity tests, eigendecomposition of
// unitaries and simultaneous diagonalization of commuting families.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "orthogate/errors.hpp"

namespace orthogate {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kDefaultTol = 1e-9;

/// Largest absolute entry, ||M||_max.
double max_abs(const ComplexMatrix& m);

/// ||[A, B]||_max.
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);

/// True iff ||M^dagger M - I||_max <= tol. Throws DimensionError on a
/// non-square matrix.
bool is_unitary(const ComplexMatrix& m, double tol = kDefaultTol);

/// Map an angle into (-pi, pi]. Values within 1e-9 of -pi map to pi.
double wrap_phase(double theta);

/// Index of the largest-magnitude entry; the first one among entries whose
/// magnitude is within 1e-9 of the maximum.
std::size_t dominant_index(const StateVector& v);

/// Multiplies v by a global phase so that its dominant entry is real and
/// positive.
StateVector canonical_phase(const StateVector& v);

/// min over theta of ||x - e^{i theta} y||_max, evaluated at the phase that
/// maximizes |<y|x>|.
double phase_aligned_distance(const StateVector& x, const StateVector& y);

/// Returns y multiplied by the global phase that best aligns it with x.
StateVector align_phase(const StateVector& reference, const StateVector& y);

/// Eigendecomposition of a unitary matrix.
struct EigenSystem {
  /// Unimodular eigenvalues e^{i theta_r}.
  std::vector<cplx> values;
  /// Orthonormal eigenvectors as columns, in the same order as values.
  ComplexMatrix vectors;

  /// arg(values[r]) in (-pi, pi].
  std::vector<double> phases() const;
};

/// One orthonormal basis diagonalizing every member of a commuting family.
///
/// phases(i, r) is the eigenphase of family member i on column r of
/// vectors: M_i vectors.col(r) = exp(i phases(i, r)) vectors.col(r).
/// Columns are ordered by the phase tuple (phases(0, r), phases(1, r), ...)
/// ascending; ties are broken lexicographically on the canonicalized
/// eigenvector. Every column has its dominant entry real and positive.
struct SharedEigenbasis {
  ComplexMatrix vectors;
  RealMatrix phases;

  std::size_t size() const noexcept { return static_cast<std::size_t>(vectors.cols()); }
  /// The eigensystem of family member i in this basis.
  EigenSystem system(std::size_t i) const;
};

/// Full orthonormal eigendecomposition of a unitary matrix, ordered by
/// eigenphase ascending. Degenerate eigenspaces get an arbitrary orthonormal
/// basis. Throws PreconditionError if m is not unitary at tol.
EigenSystem eig_unitary(const ComplexMatrix& m, double tol = kDefaultTol);

/// Simultaneous diagonalization of pairwise-commuting unitaries.
///
/// A random real combination of the Hermitian and anti-Hermitian parts of
/// the family is diagonalized; clusters of equal eigenvalues are refined
/// recursively with fresh coefficients. The whole procedure is retried
/// (up to 8 attempts) if any eigen-residual exceeds tol. The random stream is
/// seeded deterministically, so identical inputs give identical output.
///
/// Throws CommutationError naming the first non-commuting pair, and
/// PreconditionError for non-unitary members.
SharedEigenbasis simultaneous_eigenbasis(std::span<const ComplexMatrix> family,
                                         double tol = kDefaultTol);

/// G(r, s) = <states[r] | states[s]>.
ComplexMatrix gram(std::span<const StateVector> states);

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace orthogate
