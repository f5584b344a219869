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

#include "orthogate/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "gtest/gtest.h"

#include "support/oracles.hpp"

using namespace orthogate;
using namespace orthogate::testing;

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I{0.0, 1.0};

ComplexMatrix sigma_x() { return (ComplexMatrix(2, 2) << 0, 1, 1, 0).finished(); }
ComplexMatrix sigma_z() { return (ComplexMatrix(2, 2) << 1, 0, 0, -1).finished(); }

ComplexMatrix cyclic_shift(int n) {
  ComplexMatrix s = ComplexMatrix::Zero(n, n);
  for (int m = 0; m < n; ++m) s((m + 1) % n, m) = 1.0;
  return s;
}

// Is v a multiple of one of the candidates?
bool matches_some(const StateVector& v, const std::vector<StateVector>& candidates, double tol) {
  return std::any_of(candidates.begin(), candidates.end(),
                     [&](const StateVector& c) { return naive_aligned_distance(v, c) <= tol; });
}

}  // namespace

TEST(is_unitary, spec_examples) {
  EXPECT_TRUE(is_unitary(ComplexMatrix::Identity(2, 2), 1e-12));
  EXPECT_TRUE(is_unitary(sigma_x(), 1e-12));
  EXPECT_FALSE(is_unitary((ComplexMatrix(2, 2) << 1, 1, 0, 1).finished(), 1e-12));
}

TEST(is_unitary, non_square_is_a_dimension_error) {
  EXPECT_THROW(is_unitary(ComplexMatrix::Zero(2, 3)), DimensionError);
}

TEST(is_unitary, agrees_with_loop_oracle) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 6;
    ComplexMatrix u = gram_schmidt_unitary(n, rng);
    EXPECT_TRUE(is_unitary(u));
    u(0, 0) += 1e-6;
    EXPECT_EQ(is_unitary(u, 1e-9), naive_unitarity_error(u) <= 1e-9);
    EXPECT_FALSE(is_unitary(u, 1e-9));
  }
}

TEST(wrap_phase, lands_in_half_open_interval) {
  EXPECT_DOUBLE_EQ(wrap_phase(-kPi), kPi);
  EXPECT_DOUBLE_EQ(wrap_phase(kPi), kPi);
  EXPECT_NEAR(wrap_phase(3 * kPi / 2), -kPi / 2, 1e-15);
  EXPECT_NEAR(wrap_phase(-5 * kPi / 2), -kPi / 2, 1e-15);
  EXPECT_DOUBLE_EQ(wrap_phase(0.25), 0.25);
}

TEST(canonical_phase, dominant_entry_real_positive) {
  StateVector v(3);
  v << 0.1, std::polar(0.9, 2.0), std::polar(0.3, -1.0);
  const StateVector c = canonical_phase(v);
  EXPECT_EQ(dominant_index(c), 1u);
  EXPECT_NEAR(c[1].imag(), 0.0, 1e-15);
  EXPECT_GT(c[1].real(), 0.0);
  EXPECT_LE(naive_aligned_distance(c, v), 1e-15);
}

TEST(eig_unitary, sigma_x) {
  const EigenSystem es = eig_unitary(sigma_x());
  ASSERT_EQ(es.values.size(), 2u);
  // Phase ascending: -1 (phase pi) sorts after +1 (phase 0).
  EXPECT_NEAR(std::abs(es.values[0] - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(es.values[1] + 1.0), 0.0, 1e-12);
  StateVector plus(2), minus(2);
  plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  minus << 1 / std::sqrt(2.0), -1 / std::sqrt(2.0);
  EXPECT_LE(naive_aligned_distance(es.vectors.col(0), plus), 1e-12);
  EXPECT_LE(naive_aligned_distance(es.vectors.col(1), minus), 1e-12);
}

TEST(eig_unitary, identity_any_orthonormal_basis) {
  const EigenSystem es = eig_unitary(ComplexMatrix::Identity(5, 5));
  for (const cplx& v : es.values) EXPECT_NEAR(std::abs(v - 1.0), 0.0, 1e-12);
  EXPECT_LE(naive_unitarity_error(es.vectors), 1e-12);
}

TEST(eig_unitary, cyclic_shift_gives_roots_of_unity_and_fourier_modes) {
  for (int n = 2; n <= 8; ++n) {
    const EigenSystem es = eig_unitary(cyclic_shift(n));
    std::vector<StateVector> modes;
    for (int k = 0; k < n; ++k) modes.push_back(fourier_mode(n, k));
    std::vector<double> expected;
    for (int k = 0; k < n; ++k) expected.push_back(wrap_phase(-2 * kPi * k / n));
    std::sort(expected.begin(), expected.end());
    const auto phases = es.phases();
    for (int r = 0; r < n; ++r) {
      EXPECT_NEAR(phases[r], expected[r], 1e-10) << "n=" << n << " r=" << r;
      EXPECT_TRUE(matches_some(es.vectors.col(r), modes, 1e-10)) << "n=" << n << " r=" << r;
    }
  }
}

TEST(eig_unitary, non_unitary_is_a_precondition_error) {
  EXPECT_THROW(eig_unitary((ComplexMatrix(2, 2) << 1, 1, 0, 1).finished()), PreconditionError);
}

TEST(eig_unitary, reconstruction_property) {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const ComplexMatrix u = gram_schmidt_unitary(n, rng);
    const double tol = 1e-9;
    const EigenSystem es = eig_unitary(u, tol);
    ComplexMatrix d = ComplexMatrix::Zero(u.rows(), u.cols());
    for (std::size_t r = 0; r < n; ++r) {
      EXPECT_NEAR(std::abs(es.values[r]), 1.0, tol);
      d(r, r) = es.values[r];
    }
    const ComplexMatrix rebuilt = naive_mul(naive_mul(es.vectors, d), naive_adjoint(es.vectors));
    EXPECT_LE(naive_max_abs_diff(rebuilt, u), 10 * tol);
    EXPECT_LE(naive_unitarity_error(es.vectors), tol);
  }
}

TEST(eig_unitary, degenerate_spectrum_still_orthonormal) {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const ComplexMatrix w = gram_schmidt_unitary(n, rng);
    ComplexMatrix d = ComplexMatrix::Zero(n, n);
    for (std::size_t r = 0; r < n; ++r) d(r, r) = r % 2 == 0 ? cplx{1.0} : I;
    const ComplexMatrix u = naive_mul(naive_mul(w, d), naive_adjoint(w));
    const EigenSystem es = eig_unitary(u);
    EXPECT_LE(naive_unitarity_error(es.vectors), 1e-9);
    for (std::size_t r = 0; r < n; ++r) {
      const StateVector lhs = naive_mul(u, es.vectors.col(r));
      EXPECT_LE((lhs - es.values[r] * es.vectors.col(r)).cwiseAbs().maxCoeff(), 1e-9);
    }
  }
}

TEST(simultaneous_eigenbasis, diagonal_family) {
  const std::vector<ComplexMatrix> family = {ComplexMatrix::Identity(2, 2), sigma_z()};
  const SharedEigenbasis basis = simultaneous_eigenbasis(family);
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_LE(naive_aligned_distance(basis.vectors.col(0), StateVector::Unit(2, 0)), 1e-12);
  EXPECT_LE(naive_aligned_distance(basis.vectors.col(1), StateVector::Unit(2, 1)), 1e-12);
  EXPECT_NEAR(basis.phases(0, 0), 0.0, 1e-12);
  EXPECT_NEAR(basis.phases(0, 1), 0.0, 1e-12);
  EXPECT_NEAR(basis.phases(1, 0), 0.0, 1e-12);
  EXPECT_NEAR(basis.phases(1, 1), kPi, 1e-12);
}

TEST(simultaneous_eigenbasis, cprime_operators_have_sign_phases) {
  // Diagonal sign patterns of the four C' operators in the computational basis.
  const int signs[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
  std::vector<ComplexMatrix> family;
  for (const auto& row : signs) {
    ComplexMatrix c = ComplexMatrix::Zero(4, 4);
    for (int r = 0; r < 4; ++r) c(r, r) = row[r];
    family.push_back(c);
  }
  const SharedEigenbasis basis = simultaneous_eigenbasis(family);
  ASSERT_EQ(basis.size(), 4u);
  for (std::size_t r = 0; r < 4; ++r) {
    const Eigen::Index e = dominant_index(basis.vectors.col(r));
    EXPECT_LE(naive_aligned_distance(basis.vectors.col(r), StateVector::Unit(4, e)), 1e-12);
    for (std::size_t i = 0; i < 4; ++i) {
      EXPECT_NEAR(basis.phases(i, r), signs[i][e] > 0 ? 0.0 : kPi, 1e-12);
    }
  }
}

TEST(simultaneous_eigenbasis, non_commuting_pair_reports_indices_and_norm) {
  const std::vector<ComplexMatrix> family = {ComplexMatrix::Identity(2, 2), sigma_x(), sigma_z()};
  try {
    simultaneous_eigenbasis(family);
    FAIL() << "expected CommutationError";
  } catch (const CommutationError& e) {
    EXPECT_EQ(e.first(), 1u);
    EXPECT_EQ(e.second(), 2u);
    EXPECT_NEAR(e.norm(), naive_commutator_norm(sigma_x(), sigma_z()), 1e-12);
  }
}

TEST(simultaneous_eigenbasis, recovers_planted_phases) {
  Rng rng(23);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const std::size_t members = 1 + trial % 4;
    const ComplexMatrix w = gram_schmidt_unitary(n, rng);
    // Planted phases; a few repeats so that some members are degenerate.
    std::vector<std::vector<double>> planted(members, std::vector<double>(n));
    for (auto& row : planted) {
      for (std::size_t r = 0; r < n; ++r) row[r] = (r > 0 && r % 3 == 0) ? row[r - 1] : angle(rng);
    }
    std::vector<ComplexMatrix> family;
    for (const auto& row : planted) {
      ComplexMatrix d = ComplexMatrix::Zero(n, n);
      for (std::size_t r = 0; r < n; ++r) d(r, r) = std::polar(1.0, row[r]);
      family.push_back(naive_mul(naive_mul(w, d), naive_adjoint(w)));
    }
    const double tol = 1e-9;
    const SharedEigenbasis basis = simultaneous_eigenbasis(family, tol);
    ASSERT_EQ(basis.size(), n);
    EXPECT_LE(naive_max_abs_diff(gram(std::vector<StateVector>(
                                     basis.vectors.colwise().begin(), basis.vectors.colwise().end())),
                                 ComplexMatrix::Identity(n, n)),
              tol);
    // Each recovered phase column equals some planted column.
    std::vector<bool> used(n, false);
    for (std::size_t r = 0; r < n; ++r) {
      bool found = false;
      for (std::size_t c = 0; c < n && !found; ++c) {
        if (used[c]) continue;
        bool same = true;
        for (std::size_t i = 0; i < members && same; ++i) {
          same = std::abs(std::polar(1.0, basis.phases(i, r)) - std::polar(1.0, planted[i][c])) <= 1e-8;
        }
        if (same) used[c] = found = true;
      }
      EXPECT_TRUE(found) << "trial " << trial << " column " << r;
      for (std::size_t i = 0; i < members; ++i) {
        const StateVector lhs = naive_mul(family[i], basis.vectors.col(r));
        const StateVector rhs = std::polar(1.0, basis.phases(i, r)) * basis.vectors.col(r);
        EXPECT_LE((lhs - rhs).cwiseAbs().maxCoeff(), tol);
      }
    }
  }
}

TEST(simultaneous_eigenbasis, deterministic_output) {
  Rng rng(99);
  const ComplexMatrix w = gram_schmidt_unitary(6, rng);
  ComplexMatrix d = ComplexMatrix::Identity(6, 6);
  d(0, 0) = d(1, 1) = -1.0;
  const std::vector<ComplexMatrix> family = {naive_mul(naive_mul(w, d), naive_adjoint(w))};
  const SharedEigenbasis a = simultaneous_eigenbasis(family);
  const SharedEigenbasis b = simultaneous_eigenbasis(family);
  EXPECT_EQ(naive_max_abs_diff(a.vectors, b.vectors), 0.0);
}

TEST(gram, spec_examples) {
  const std::vector<StateVector> basis = {StateVector::Unit(2, 0), StateVector::Unit(2, 1)};
  EXPECT_EQ(naive_max_abs_diff(gram(basis), ComplexMatrix::Identity(2, 2)), 0.0);
  const std::vector<StateVector> repeated = {StateVector::Unit(2, 0), StateVector::Unit(2, 0)};
  EXPECT_EQ(naive_max_abs_diff(gram(repeated), ComplexMatrix::Ones(2, 2)), 0.0);
}

TEST(gram, entries_are_inner_products) {
  Rng rng(3);
  std::vector<StateVector> states;
  for (int i = 0; i < 4; ++i) states.push_back(random_state(3, rng));
  const ComplexMatrix g = gram(states);
  for (int r = 0; r < 4; ++r) {
    for (int s = 0; s < 4; ++s) EXPECT_NEAR(std::abs(g(r, s) - naive_inner(states[r], states[s])), 0.0, 1e-15);
  }
}

TEST(gram, dimension_mismatch) {
  const std::vector<StateVector> states = {StateVector::Unit(2, 0), StateVector::Unit(3, 0)};
  EXPECT_THROW(gram(states), DimensionError);
}
