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

#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace orthogate::testing {

namespace {

using Index = Eigen::Index;

constexpr double kPi = std::numbers::pi;
constexpr int kGridAngles = 12;
constexpr int kGridWeights = 12;
constexpr double kProductTol = 1e-9;
constexpr double kOrthTol = 1e-9;

}  // namespace

ComplexMatrix naive_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("naive_mul: shape mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < b.cols(); ++j) {
      cplx s = 0.0;
      for (Index k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  }
  return c;
}

ComplexMatrix naive_adjoint(const ComplexMatrix& a) {
  ComplexMatrix c(a.cols(), a.rows());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) c(j, i) = std::conj(a(i, j));
  }
  return c;
}

cplx naive_inner(const StateVector& x, const StateVector& y) {
  cplx s = 0.0;
  for (Index i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

cplx naive_trace(const ComplexMatrix& a) {
  cplx s = 0.0;
  for (Index i = 0; i < a.rows(); ++i) s += a(i, i);
  return s;
}

double naive_max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double worst = 0.0;
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  }
  return worst;
}

double naive_unitarity_error(const ComplexMatrix& m) {
  const ComplexMatrix p = naive_mul(naive_adjoint(m), m);
  double worst = 0.0;
  for (Index i = 0; i < p.rows(); ++i) {
    for (Index j = 0; j < p.cols(); ++j) {
      worst = std::max(worst, std::abs(p(i, j) - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double naive_commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
  return naive_max_abs_diff(naive_mul(a, b), naive_mul(b, a));
}

double naive_aligned_distance(const StateVector& x, const StateVector& y) {
  const cplx overlap = naive_inner(y, x);
  const cplx phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : cplx{1.0};
  double worst = 0.0;
  for (Index i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - phase * y[i]));
  return worst;
}

double reduced_purity(const StateVector& joint, std::size_t alice_dim, std::size_t bob_dim) {
  const auto na = static_cast<Index>(alice_dim);
  const auto nb = static_cast<Index>(bob_dim);
  // rho_A(a, a') = sum_b psi(a, b) conj(psi(a', b))
  double purity = 0.0;
  for (Index a = 0; a < na; ++a) {
    for (Index ap = 0; ap < na; ++ap) {
      cplx rho = 0.0;
      for (Index b = 0; b < nb; ++b) rho += joint[a * nb + b] * std::conj(joint[ap * nb + b]);
      purity += std::norm(rho);
    }
  }
  return purity;
}

StateVector fourier_mode(std::size_t n, std::size_t k) {
  StateVector v(static_cast<Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    v[static_cast<Index>(j)] =
        std::polar(1.0 / std::sqrt(static_cast<double>(n)),
                   2.0 * kPi * static_cast<double>(k * j) / static_cast<double>(n));
  }
  return v;
}

StateVector random_state(std::size_t n, Rng& rng) {
  std::normal_distribution<double> g;
  StateVector v(static_cast<Index>(n));
  double norm = 0.0;
  for (Index i = 0; i < v.size(); ++i) {
    v[i] = cplx{g(rng), g(rng)};
    norm += std::norm(v[i]);
  }
  for (Index i = 0; i < v.size(); ++i) v[i] /= std::sqrt(norm);
  return v;
}

std::vector<double> random_phases(std::size_t n, Rng& rng) {
  std::uniform_real_distribution<double> u(-kPi, kPi);
  std::vector<double> out(n);
  for (auto& x : out) x = u(rng);
  return out;
}

ComplexMatrix gram_schmidt_unitary(std::size_t n, Rng& rng) {
  const auto dim = static_cast<Index>(n);
  ComplexMatrix q(dim, dim);
  for (Index c = 0; c < dim; ++c) {
    StateVector v = random_state(n, rng);
    for (int pass = 0; pass < 2; ++pass) {
      for (Index p = 0; p < c; ++p) {
        const cplx proj = naive_inner(q.col(p), v);
        for (Index i = 0; i < dim; ++i) v[i] -= proj * q(i, p);
      }
    }
    double norm = 0.0;
    for (Index i = 0; i < dim; ++i) norm += std::norm(v[i]);
    for (Index i = 0; i < dim; ++i) q(i, c) = v[i] / std::sqrt(norm);
  }
  return q;
}

std::vector<double> perturbed_weights(std::size_t n, double shift, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const std::size_t up = pick(rng);
  std::size_t down = pick(rng);
  while (down == up) down = pick(rng);
  std::vector<double> p(n, 1.0 / static_cast<double>(n));
  const double amount = std::min(shift, p[down]);
  p[up] += amount;
  p[down] -= amount;
  return p;
}

ControlledGate random_monomial_gate(std::size_t n, Rng& rng) {
  const auto dim = static_cast<Index>(n);
  std::vector<std::size_t> targets(n);
  std::iota(targets.begin(), targets.end(), std::size_t{0});
  std::shuffle(targets.begin(), targets.end(), rng);
  std::bernoulli_distribution flip(0.5);

  std::vector<ComplexMatrix> us;
  for (std::size_t a = 0; a < n; ++a) {
    // Column 0 goes to targets[a]; the other columns fill the remaining rows.
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < n; ++r) {
      if (r != targets[a]) rows.push_back(r);
    }
    std::shuffle(rows.begin(), rows.end(), rng);
    ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
    u(static_cast<Index>(targets[a]), 0) = flip(rng) ? -1.0 : 1.0;
    for (std::size_t c = 1; c < n; ++c) {
      u(static_cast<Index>(rows[c - 1]), static_cast<Index>(c)) = flip(rng) ? -1.0 : 1.0;
    }
    us.push_back(u);
  }
  StateVector ref = StateVector::Zero(dim);
  ref[0] = 1.0;
  return ControlledGate("monomial", us, ref);
}

namespace {

std::vector<StateVector> grid_bob_states(std::size_t n) {
  std::vector<StateVector> out;
  const auto dim = static_cast<Index>(n);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<Index> support;
    for (Index i = 0; i < dim; ++i) {
      if (mask & (1u << i)) support.push_back(i);
    }
    const double amp = 1.0 / std::sqrt(static_cast<double>(support.size()));
    // The first support entry carries phase 0; the rest range over the grid.
    std::size_t combos = 1;
    for (std::size_t i = 1; i < support.size(); ++i) combos *= kGridAngles;
    for (std::size_t code = 0; code < combos; ++code) {
      StateVector v = StateVector::Zero(dim);
      std::size_t rest = code;
      v[support[0]] = amp;
      for (std::size_t i = 1; i < support.size(); ++i) {
        const double angle = 2.0 * kPi * static_cast<double>(rest % kGridAngles) / kGridAngles;
        rest /= kGridAngles;
        v[support[i]] = std::polar(amp, angle);
      }
      out.push_back(v);
    }
  }
  return out;
}

std::vector<std::vector<double>> simplex_grid(std::size_t n) {
  std::vector<std::vector<double>> out;
  std::vector<int> parts(n, 0);
  // Enumerate compositions of kGridWeights into n nonnegative parts.
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      parts[i] = left;
      std::vector<double> p(n);
      for (std::size_t j = 0; j < n; ++j) p[j] = static_cast<double>(parts[j]) / kGridWeights;
      out.push_back(std::move(p));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      parts[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, kGridWeights);
  return out;
}

}  // namespace

GridOracleResult grid_reverse_oracle(const ControlledGate& gate) {
  const std::size_t n = gate.cardinality();
  if (n > 3) throw std::invalid_argument("grid_reverse_oracle: N must be <= 3");
  const auto dim = static_cast<Index>(n);
  const auto bob = grid_bob_states(n);

  GridOracleResult best;
  for (const auto& p : simplex_grid(n)) {
    // Joint output for Alice amplitudes sqrt(p): block a holds sqrt(p_a) U_a b.
    std::vector<std::size_t> ok;
    std::vector<StateVector> alice_factor(bob.size());
    for (std::size_t s = 0; s < bob.size(); ++s) {
      StateVector joint(dim * dim);
      for (Index a = 0; a < dim; ++a) {
        const ComplexMatrix& u = gate.unitary(static_cast<std::size_t>(a));
        for (Index m = 0; m < dim; ++m) {
          cplx acc = 0.0;
          for (Index k = 0; k < dim; ++k) acc += u(m, k) * bob[s][k];
          joint[a * dim + m] = std::sqrt(p[static_cast<std::size_t>(a)]) * acc;
        }
      }
      if (reduced_purity(joint, n, n) < 1.0 - kProductTol) continue;
      // Alice's factor: the Bob column with the largest weight, normalized.
      Index col = 0;
      double col_norm = -1.0;
      for (Index m = 0; m < dim; ++m) {
        double w = 0.0;
        for (Index a = 0; a < dim; ++a) w += std::norm(joint[a * dim + m]);
        if (w > col_norm) {
          col_norm = w;
          col = m;
        }
      }
      StateVector f(dim);
      for (Index a = 0; a < dim; ++a) f[a] = joint[a * dim + col] / std::sqrt(col_norm);
      alice_factor[s] = f;
      ok.push_back(s);
    }
    if (!ok.empty() && best.messages == 0) {
      best.messages = 1;
      best.weights = p;
      best.bob_states = {bob[ok[0]]};
    }
    auto compatible = [&](std::size_t s, std::size_t t) {
      return std::norm(naive_inner(bob[s], bob[t])) <= kOrthTol &&
             std::norm(naive_inner(alice_factor[s], alice_factor[t])) <= kOrthTol;
    };
    for (std::size_t i = 0; i < ok.size() && best.messages < n; ++i) {
      for (std::size_t j = i + 1; j < ok.size() && best.messages < n; ++j) {
        if (!compatible(ok[i], ok[j])) continue;
        if (best.messages < 2) {
          best.messages = 2;
          best.weights = p;
          best.bob_states = {bob[ok[i]], bob[ok[j]]};
        }
        if (n < 3) continue;
        for (std::size_t k = j + 1; k < ok.size(); ++k) {
          if (compatible(ok[i], ok[k]) && compatible(ok[j], ok[k])) {
            best.messages = 3;
            best.weights = p;
            best.bob_states = {bob[ok[i]], bob[ok[j]], bob[ok[k]]};
            break;
          }
        }
      }
    }
    if (best.messages == n) break;
  }
  return best;
}

}  // namespace orthogate::testing
