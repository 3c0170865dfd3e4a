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
#include <vector>

#include "ssyk/circuit.hpp"
#include "ssyk/clustering.hpp"
#include "ssyk/diagonalizer.hpp"
#include "ssyk/resources.hpp"
#include "ssyk/syk_model.hpp"
#include "ssyk/trotter.hpp"

namespace ssyk {

/// Instance -> JW Hamiltonian -> commuting clusters -> diagonalizers.
struct CompiledHamiltonian {
  PauliHamiltonian hamiltonian;
  std::vector<Cluster> clusters;
  std::vector<DiagonalizedCluster> diagonalized;
};

CompiledHamiltonian compile_hamiltonian(const SykInstance& inst,
                                        ColoringStrategy coloring = ColoringStrategy::DescendingDegree);

/// Circuit for a full plan (clusters of `compiled` are used, plan.clusters ignored).
Circuit compile_trotter(const CompiledHamiltonian& compiled, int order, double t, std::int64_t r,
                        const TrotterOptions& options = {});

/// Clifford+T accounting of a single Trotter step. Counts do not depend on
/// t because rotation angles are never Clifford multiples in practice.
ResourceReport step_resources(const CompiledHamiltonian& compiled, int order,
                              const RotationCostModel& model = {});

}  // namespace ssyk
