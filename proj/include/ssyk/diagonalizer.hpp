// Copyright 2026 The ssyk Authors
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

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "ssyk/circuit.hpp"
#include "ssyk/pauli.hpp"

namespace ssyk {

/// A diagonal image +-Z_{q1} Z_{q2} ... of one cluster term.
struct ZImage {
  int sign = 1;
  std::vector<std::uint32_t> support;

  bool operator==(const ZImage&) const = default;
};

/// Clifford C with C P_i C^dagger = z_strings[i] for every cluster term P_i.
struct DiagonalizedCluster {
  Circuit clifford;
  std::vector<ZImage> z_strings;
};

class NonCommutingClusterError : public std::invalid_argument {
 public:
  NonCommutingClusterError(std::size_t first, std::size_t second);
  std::size_t first;
  std::size_t second;
};

/// Symplectic Gaussian elimination on the cluster tableau. Row operations
/// on the generators are free; the X block is brought to reduced echelon form
/// with pivots at the lowest available qubit, CNOTs clear the non-pivot X
/// columns, S and CZ clear the (symmetric) pivot Z block, and H on every pivot
/// leaves only Z. Remaining Z bits outside the pivots are cleared by CZ only
/// where that shortens the term ladders. Dependent strings come out as
/// products of pivot images.
///
/// Throws NonCommutingClusterError naming the first anticommuting pair, and
/// std::invalid_argument for empty input or non-Hermitian strings.
DiagonalizedCluster diagonalize_cluster(std::span<const PauliString> paulis);

/// exp(-i dt sum_k coeffs[k] P_k) as C, then per term a CNOT chain onto the
/// highest qubit of its Z support with Rz(2 sign coeff dt) on that qubit, then
/// C^dagger. Identity images only contribute a global phase and emit nothing.
Circuit cluster_evolution_circuit(const DiagonalizedCluster& dc, std::span<const double> coeffs,
                                  double dt);

/// Same gates as cluster_evolution_circuit, appended to `out`.
void append_cluster_evolution(Circuit& out, const DiagonalizedCluster& dc,
                              std::span<const double> coeffs, double dt);

}  // namespace ssyk
