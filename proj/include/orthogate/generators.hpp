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

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "orthogate/gate.hpp"

namespace orthogate {

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the
/// diagonal phases of R divided out.
ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng);

/// N x N phase table phases(n, r) = 2 pi n r / N (the DFT phases).
RealMatrix dft_phase_table(std::size_t n);

/// Random symmetric orthogonal gate U_n = T W diag(e^{i phase(n, r)}) W^dagger
/// with Haar T and W, DFT phases dressed by random row and column phases.
/// The reference state comes from the constructive formula for symmetric
/// gates, so the result always validates.
ControlledGate random_symmetric_gate(std::size_t n, std::uint64_t seed);

/// Random orthogonal gate with no imposed commutation structure: Haar
/// unitaries conditioned to map a Haar reference onto a Haar orthonormal
/// basis. Generically asymmetric for N >= 3.
ControlledGate random_orthogonal_gate(std::size_t n, std::uint64_t seed);

}  // namespace orthogate
