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
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

namespace orthogate {

CommutationError::CommutationError(std::size_t first, std::size_t second, double norm)
    : Error("family members " + std::to_string(first) + " and " + std::to_string(second) +
            " do not commute (commutator norm " + std::to_string(norm) + ")"),
      first_(first),
      second_(second),
      norm_(norm) {}

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(what), line_(line), column_(column) {}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
  return max_abs(a * b - b * a);
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError("is_unitary: expected a non-empty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (!m.allFinite()) return false;
  const auto identity = ComplexMatrix::Identity(m.rows(), m.cols());
  return max_abs(m.adjoint() * m - identity) <= tol;
}

double wrap_phase(double theta) {
  constexpr double pi = std::numbers::pi;
  double t = std::remainder(theta, 2.0 * pi);
  if (t <= -pi + 1e-9) t = pi;
  if (t > pi) t = pi;
  return t;
}

std::size_t dominant_index(const StateVector& v) {
  if (v.size() == 0) return 0;
  const double peak = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) >= peak - 1e-9) return static_cast<std::size_t>(i);
  }
  return 0;
}

StateVector canonical_phase(const StateVector& v) {
  if (v.size() == 0) return v;
  const cplx lead = v[static_cast<Eigen::Index>(dominant_index(v))];
  if (std::abs(lead) == 0.0) return v;
  return v * (std::abs(lead) / lead);
}

StateVector align_phase(const StateVector& reference, const StateVector& y) {
  const cplx overlap = y.dot(reference);  // <y|reference>
  if (std::abs(overlap) == 0.0) return y;
  return y * (overlap / std::abs(overlap));
}

double phase_aligned_distance(const StateVector& x, const StateVector& y) {
  if (x.size() != y.size()) {
    throw DimensionError("phase_aligned_distance: length mismatch");
  }
  return max_abs(x - align_phase(x, y));
}

std::vector<double> EigenSystem::phases() const {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(wrap_phase(std::arg(v)));
  return out;
}

EigenSystem SharedEigenbasis::system(std::size_t i) const {
  EigenSystem es;
  es.vectors = vectors;
  for (Eigen::Index r = 0; r < phases.cols(); ++r) {
    es.values.push_back(std::polar(1.0, phases(static_cast<Eigen::Index>(i), r)));
  }
  return es;
}

namespace {

constexpr int kMaxAttempts = 8;
constexpr int kMaxDepth = 32;
constexpr double kClusterGap = 1e-7;
constexpr std::uint64_t kSeed = 0x5eedc0ffee5eedULL;

bool is_scalar(const ComplexMatrix& m, double tol) {
  const cplx mean = m.trace() / static_cast<double>(m.rows());
  return max_abs(m - mean * ComplexMatrix::Identity(m.rows(), m.cols())) <= tol;
}

ComplexMatrix hermitian_mix(std::span<const ComplexMatrix> family, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  const auto n = family.front().rows();
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  const cplx two_i(0.0, 2.0);
  for (const auto& m : family) {
    const double c = coef(rng);
    const double d = coef(rng);
    h += c * (m + m.adjoint()) / 2.0 + d * (m - m.adjoint()) / two_i;
  }
  return (h + h.adjoint()) / 2.0;
}

// Returns a unitary whose columns are joint eigenvectors of the family.
ComplexMatrix refine(std::span<const ComplexMatrix> family, double tol, std::mt19937_64& rng,
                     int depth) {
  const auto k = family.front().rows();
  const auto identity = ComplexMatrix::Identity(k, k);
  if (k == 1) return identity;
  if (std::all_of(family.begin(), family.end(),
                  [&](const ComplexMatrix& m) { return is_scalar(m, tol); })) {
    return identity;
  }

  constexpr int kMixTries = 4;
  for (int attempt = 0; attempt < kMixTries; ++attempt) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_mix(family, rng));
    const RealVector& values = solver.eigenvalues();
    const ComplexMatrix& basis = solver.eigenvectors();

    const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
    std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;  // (start, length)
    Eigen::Index start = 0;
    for (Eigen::Index i = 1; i <= values.size(); ++i) {
      if (i == values.size() || values[i] - values[i - 1] > kClusterGap * scale) {
        clusters.emplace_back(start, i - start);
        start = i;
      }
    }
    const bool stalled = clusters.size() == 1;
    if (stalled && attempt + 1 < kMixTries) continue;
    if (stalled || depth >= kMaxDepth) return basis;

    ComplexMatrix q = basis;
    for (const auto& [first, length] : clusters) {
      if (length == 1) continue;
      const ComplexMatrix block = basis.middleCols(first, length);
      std::vector<ComplexMatrix> restricted;
      restricted.reserve(family.size());
      for (const auto& m : family) restricted.push_back(block.adjoint() * m * block);
      q.middleCols(first, length) = block * refine(restricted, tol, rng, depth + 1);
    }
    return q;
  }
  return identity;  // unreachable
}

// Integer key used for ordering; values equal to within 1e-8 share a key
// except when straddling a rounding boundary.
long long order_key(double x) { return std::llround(x * 1e8); }

}  // namespace

SharedEigenbasis simultaneous_eigenbasis(std::span<const ComplexMatrix> family, double tol) {
  if (family.empty()) throw DimensionError("simultaneous_eigenbasis: empty family");
  const auto n = family.front().rows();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& m = family[i];
    if (m.rows() != n || m.cols() != n) {
      throw DimensionError("simultaneous_eigenbasis: member " + std::to_string(i) +
                           " has shape " + std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()) + ", expected " + std::to_string(n) +
                           "x" + std::to_string(n));
    }
    if (!is_unitary(m, tol)) {
      throw PreconditionError("simultaneous_eigenbasis: member " + std::to_string(i) +
                              " is not unitary");
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const double norm = commutator_norm(family[i], family[j]);
      if (norm > tol) throw CommutationError(i, j, norm);
    }
  }

  const auto members = static_cast<Eigen::Index>(family.size());
  std::mt19937_64 rng(kSeed);
  double worst = 0.0;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const ComplexMatrix q = refine(family, tol, rng, 0);

    SharedEigenbasis out;
    out.vectors.resize(n, n);
    out.phases.resize(members, n);
    worst = 0.0;
    for (Eigen::Index r = 0; r < n; ++r) {
      const StateVector v = canonical_phase(q.col(r).normalized());
      out.vectors.col(r) = v;
      for (Eigen::Index i = 0; i < members; ++i) {
        const StateVector image = family[static_cast<std::size_t>(i)] * v;
        const double theta = wrap_phase(std::arg(v.dot(image)));
        out.phases(i, r) = theta;
        worst = std::max(worst, max_abs(image - std::polar(1.0, theta) * v));
      }
    }
    if (worst > tol) continue;

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    auto key = [&](Eigen::Index r) {
      std::vector<long long> k;
      for (Eigen::Index i = 0; i < members; ++i) k.push_back(order_key(out.phases(i, r)));
      for (Eigen::Index e = 0; e < n; ++e) {
        k.push_back(order_key(out.vectors(e, r).real()));
        k.push_back(order_key(out.vectors(e, r).imag()));
      }
      return k;
    };
    std::vector<std::vector<long long>> keys;
    keys.reserve(order.size());
    for (Eigen::Index r = 0; r < n; ++r) keys.push_back(key(r));
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
      return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)];
    });

    SharedEigenbasis sorted;
    sorted.vectors.resize(n, n);
    sorted.phases.resize(members, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      sorted.vectors.col(r) = out.vectors.col(order[static_cast<std::size_t>(r)]);
      sorted.phases.col(r) = out.phases.col(order[static_cast<std::size_t>(r)]);
    }
    return sorted;
  }
  throw NumericalError("simultaneous_eigenbasis: eigen-residual " + std::to_string(worst) +
                       " exceeds tolerance after " + std::to_string(kMaxAttempts) +
                       " attempts");
}

EigenSystem eig_unitary(const ComplexMatrix& m, double tol) {
  if (!is_unitary(m, tol)) throw PreconditionError("eig_unitary: matrix is not unitary");
  const ComplexMatrix family[] = {m};
  return simultaneous_eigenbasis(family, tol).system(0);
}

ComplexMatrix gram(std::span<const StateVector> states) {
  const auto count = static_cast<Eigen::Index>(states.size());
  ComplexMatrix g(count, count);
  for (Eigen::Index r = 0; r < count; ++r) {
    if (states[static_cast<std::size_t>(r)].size() != states.front().size()) {
      throw DimensionError("gram: state " + std::to_string(r) + " has length " +
                           std::to_string(states[static_cast<std::size_t>(r)].size()) +
                           ", expected " + std::to_string(states.front().size()));
    }
  }
  for (Eigen::Index r = 0; r < count; ++r) {
    for (Eigen::Index s = 0; s < count; ++s) {
      g(r, s) = states[static_cast<std::size_t>(r)].dot(states[static_cast<std::size_t>(s)]);
    }
  }
  return g;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace orthogate
