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

#include "orthogate/feasibility.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

using namespace orthogate;

TEST(find_feasible_point, simplex_point) {
  RealMatrix a(1, 3);
  a << 1, 1, 1;
  RealVector b(1);
  b << 1;
  const auto x = find_feasible_point(a, b);
  ASSERT_TRUE(x.has_value());
  EXPECT_NEAR(x->sum(), 1.0, 1e-12);
  EXPECT_GE(x->minCoeff(), 0.0);
}

TEST(find_feasible_point, balanced_signs) {
  // p1 + p2 = 1, p1 - p2 = 0  ->  (1/2, 1/2)
  RealMatrix a(2, 2);
  a << 1, 1, 1, -1;
  RealVector b(2);
  b << 1, 0;
  const auto x = find_feasible_point(a, b);
  ASSERT_TRUE(x.has_value());
  EXPECT_NEAR((*x)[0], 0.5, 1e-12);
  EXPECT_NEAR((*x)[1], 0.5, 1e-12);
}

TEST(find_feasible_point, infeasible_sign_constraint) {
  // p1 + p2 = 1 with p1 + p2 = -1 has no solution; so does x >= 0, x = -1.
  RealMatrix a(2, 2);
  a << 1, 1, 1, 1;
  RealVector b(2);
  b << 1, -1;
  EXPECT_FALSE(find_feasible_point(a, b).has_value());
  RealMatrix c(1, 1);
  c << 1;
  RealVector d(1);
  d << -1;
  EXPECT_FALSE(find_feasible_point(c, d).has_value());
}

TEST(find_feasible_point, three_cube_roots_need_uniform_weights) {
  // sum p_n e^{2 pi i n / 3} = 0 with sum p = 1 forces p = 1/3.
  const double c = -0.5;
  const double s = std::sqrt(3.0) / 2;
  RealMatrix a(3, 3);
  a << 1, 1, 1,
       1, c, c,
       0, s, -s;
  RealVector b(3);
  b << 1, 0, 0;
  const auto x = find_feasible_point(a, b);
  ASSERT_TRUE(x.has_value());
  for (int i = 0; i < 3; ++i) EXPECT_NEAR((*x)[i], 1.0 / 3, 1e-12);
}

TEST(find_feasible_point, dimension_mismatch) {
  EXPECT_THROW(find_feasible_point(RealMatrix::Ones(2, 2), RealVector::Ones(3)), DimensionError);
}

TEST(find_feasible_point, planted_feasible_systems_are_solved) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int vars = 1 + trial % 8;
    const int rows = 1 + trial % 5;
    RealMatrix a(rows, vars);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < vars; ++j) a(i, j) = g(rng);
    RealVector planted(vars);
    for (int j = 0; j < vars; ++j) planted[j] = (trial % 3 == 0 && j % 2 == 1) ? 0.0 : u(rng);
    const RealVector b = a * planted;
    const auto x = find_feasible_point(a, b);
    ASSERT_TRUE(x.has_value()) << trial;
    EXPECT_GE(x->minCoeff(), 0.0);
    EXPECT_LE((a * *x - b).cwiseAbs().maxCoeff(), kFeasibilityTol);
  }
}

TEST(find_feasible_point, infeasible_systems_are_rejected) {
  // Rows forcing sum p = 1 and sum p = 1 + delta are inconsistent.
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int vars = 1 + trial % 6;
    RealMatrix a = RealMatrix::Ones(2, vars);
    RealVector b(2);
    b << 1.0, 1.0 + u(rng);
    EXPECT_FALSE(find_feasible_point(a, b).has_value());
  }
}
