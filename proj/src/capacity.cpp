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

#include "orthogate/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <string>

#include "orthogate/feasibility.hpp"

namespace orthogate {

namespace {

constexpr double kNullCutoff = 1e-8;
constexpr double kEigenvalueCluster = 1e-9;

long long order_key(double x) { return std::llround(x * 1e8); }

// Calls visit(indices) for every k-combination of {0..n-1} in lexicographic
// order until visit returns true.
template <typename Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (visit(std::as_const(idx))) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool same_phase(double a, double b) {
  return std::abs(std::remainder(a - b, 2.0 * std::numbers::pi)) <= 1e-9;
}

}  // namespace

SharedEigenstates shared_eigenstates(const ControlledGate& gate,
                                     std::span<const std::size_t> subset, double tol) {
  const std::size_t n = gate.cardinality();
  const auto dim = static_cast<Eigen::Index>(n);
  std::vector<std::size_t> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw DimensionError("shared_eigenstates: empty subset");
  if (members.back() >= n) {
    throw DimensionError("shared_eigenstates: control index " + std::to_string(members.back()) +
                         " out of range for N = " + std::to_string(n));
  }

  const ComplexMatrix pivot_inverse = gate.unitary(members.front()).adjoint();
  std::vector<ComplexMatrix> family;
  for (std::size_t i = 1; i < members.size(); ++i) {
    family.push_back(pivot_inverse * gate.unitary(members[i]));
  }

  std::vector<ComplexMatrix> blocks = {ComplexMatrix::Identity(dim, dim)};
  for (const auto& v : family) {
    std::vector<cplx> distinct;
    for (const cplx& value : eig_unitary(v, tol).values) {
      const bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const cplx& d) {
        return std::abs(d - value) <= kEigenvalueCluster;
      });
      if (!seen) distinct.push_back(value);
    }
    std::vector<ComplexMatrix> refined;
    for (const auto& q : blocks) {
      for (const cplx& value : distinct) {
        const ComplexMatrix shifted = (v - value * ComplexMatrix::Identity(dim, dim)) * q;
        Eigen::JacobiSVD<ComplexMatrix> svd(shifted, Eigen::ComputeFullV);
        const RealVector& sigma = svd.singularValues();
        std::vector<Eigen::Index> kernel;
        for (Eigen::Index i = 0; i < q.cols(); ++i) {
          if (i >= sigma.size() || sigma[i] <= kNullCutoff) kernel.push_back(i);
        }
        if (kernel.empty()) continue;
        ComplexMatrix block(dim, static_cast<Eigen::Index>(kernel.size()));
        for (std::size_t c = 0; c < kernel.size(); ++c) {
          block.col(static_cast<Eigen::Index>(c)) = q * svd.matrixV().col(kernel[c]);
        }
        refined.push_back(std::move(block));
      }
    }
    blocks = std::move(refined);
    if (blocks.empty()) break;
  }

  SharedEigenstates out;
  out.subset = members;
  std::vector<StateVector> states;
  for (const auto& q : blocks) {
    for (Eigen::Index c = 0; c < q.cols(); ++c) states.push_back(canonical_phase(q.col(c).normalized()));
  }
  const auto rows = static_cast<Eigen::Index>(members.size());
  const auto count = static_cast<Eigen::Index>(states.size());
  RealMatrix xi = RealMatrix::Zero(rows, count);
  for (Eigen::Index r = 0; r < count; ++r) {
    for (Eigen::Index i = 1; i < rows; ++i) {
      const auto& s = states[static_cast<std::size_t>(r)];
      xi(i, r) = wrap_phase(std::arg(s.dot(family[static_cast<std::size_t>(i - 1)] * s)));
    }
  }

  std::vector<std::vector<long long>> keys;
  for (Eigen::Index r = 0; r < count; ++r) {
    std::vector<long long> key;
    for (Eigen::Index i = 0; i < rows; ++i) key.push_back(order_key(xi(i, r)));
    for (Eigen::Index e = 0; e < dim; ++e) {
      key.push_back(order_key(states[static_cast<std::size_t>(r)][e].real()));
      key.push_back(order_key(states[static_cast<std::size_t>(r)][e].imag()));
    }
    keys.push_back(std::move(key));
  }
  std::vector<std::size_t> order(states.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

  out.xi.resize(rows, count);
  for (std::size_t r = 0; r < order.size(); ++r) {
    out.states.push_back(states[order[r]]);
    out.xi.col(static_cast<Eigen::Index>(r)) = xi.col(static_cast<Eigen::Index>(order[r]));
  }
  return out;
}

std::optional<Strategy> achievable(const ControlledGate& gate, const SharedEigenstates& shared,
                                   std::size_t k, double /*tol*/) {
  const std::size_t support = shared.subset.size();
  if (k == 0 || k > shared.states.size() || k > support) return std::nullopt;
  const auto vars = static_cast<Eigen::Index>(support);
  const auto pairs = static_cast<Eigen::Index>(k * (k - 1) / 2);

  std::optional<Strategy> found;
  for_each_combination(shared.states.size(), k, [&](const std::vector<std::size_t>& chosen) {
    // Two inputs with identical phase rows give identical Alice outputs.
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = x + 1; y < k; ++y) {
        bool identical = true;
        for (Eigen::Index i = 0; i < vars && identical; ++i) {
          identical = same_phase(shared.xi(i, static_cast<Eigen::Index>(chosen[x])),
                                 shared.xi(i, static_cast<Eigen::Index>(chosen[y])));
        }
        if (identical) return false;
      }
    }

    RealMatrix a(1 + 2 * pairs, vars);
    RealVector b = RealVector::Zero(1 + 2 * pairs);
    a.row(0).setOnes();
    b[0] = 1.0;
    Eigen::Index row = 1;
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = x + 1; y < k; ++y) {
        for (Eigen::Index i = 0; i < vars; ++i) {
          const double delta = shared.xi(i, static_cast<Eigen::Index>(chosen[y])) -
                               shared.xi(i, static_cast<Eigen::Index>(chosen[x]));
          a(row, i) = std::cos(delta);
          a(row + 1, i) = std::sin(delta);
        }
        row += 2;
      }
    }
    const auto p = find_feasible_point(a, b, kFeasibilityTol);
    if (!p) return false;

    Strategy s;
    s.chosen = chosen;
    s.weights = RealVector::Zero(static_cast<Eigen::Index>(gate.cardinality()));
    for (Eigen::Index i = 0; i < vars; ++i) {
      s.weights[static_cast<Eigen::Index>(shared.subset[static_cast<std::size_t>(i)])] = (*p)[i];
    }
    found = std::move(s);
    return true;
  });
  return found;
}

double certificate_tolerance(double tol) { return std::max(tol, 1e-7); }

CapacityResult max_reverse_messages(const ControlledGate& gate, double tol) {
  if (!gate.reference()) {
    throw PreconditionError("capacity search needs an orthogonal gate with a reference state");
  }
  const std::size_t n = gate.cardinality();
  std::map<std::vector<std::size_t>, SharedEigenstates> cache;
  auto shared_for = [&](const std::vector<std::size_t>& subset) -> const SharedEigenstates& {
    auto it = cache.find(subset);
    if (it == cache.end()) it = cache.emplace(subset, shared_eigenstates(gate, subset, tol)).first;
    return it->second;
  };

  for (std::size_t k = n; k >= 1; --k) {
    for (std::size_t size = n; size >= k; --size) {
      std::optional<CapacityResult> result;
      for_each_combination(n, size, [&](const std::vector<std::size_t>& subset) {
        const SharedEigenstates& shared = shared_for(subset);
        if (shared.states.size() < k) return false;
        const auto strategy = achievable(gate, shared, k, tol);
        if (!strategy) return false;

        CapacityResult r;
        r.messages = k;
        r.subset = subset;
        r.weights = strategy->weights;
        r.xi_table.resize(static_cast<Eigen::Index>(subset.size()), static_cast<Eigen::Index>(k));
        for (std::size_t c = 0; c < k; ++c) {
          r.shared_states.push_back(shared.states[strategy->chosen[c]]);
          r.xi_table.col(static_cast<Eigen::Index>(c)) =
              shared.xi.col(static_cast<Eigen::Index>(strategy->chosen[c]));
        }
        const StateVector amplitudes = r.weights.cwiseMax(0.0).cwiseSqrt().cast<cplx>();
        r.certificate = attempt_reverse_general(gate, amplitudes, r.shared_states, tol);
        r.certificate_check = check_distinguishability(r.certificate, certificate_tolerance(tol));
        const bool decoded = std::all_of(
            r.certificate.begin(), r.certificate.end(),
            [](const ProtocolTranscript& t) { return t.factorized && t.decoded.has_value(); });
        if (!r.certificate_check.distinguishable || !decoded) {
          throw InconsistencyError(
              "capacity search found a feasible strategy for " + std::to_string(k) +
              " messages but its protocol Gram check failed (deviation " +
              std::to_string(r.certificate_check.max_deviation) + ")");
        }
        result = std::move(r);
        return true;
      });
      if (result) return std::move(*result);
      if (size == k) break;
    }
    if (k == 1) break;
  }
  throw InconsistencyError("capacity search found no strategy, not even a single message");
}

std::size_t necessary_message_bound(const ControlledGate& gate, double tol) {
  const std::size_t n = gate.cardinality();
  std::size_t best = 0;
  for (std::size_t size = n; size > best; --size) {
    for_each_combination(n, size, [&](const std::vector<std::size_t>& subset) {
      best = std::max(best, std::min(size, shared_eigenstates(gate, subset, tol).states.size()));
      return best >= size;
    });
  }
  return best;
}

}  // namespace orthogate
