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

#include "ssyk/pipeline.hpp"

namespace ssyk {

CompiledHamiltonian compile_hamiltonian(const SykInstance& inst, ColoringStrategy coloring) {
  CompiledHamiltonian out;
  out.hamiltonian = jordan_wigner(inst);
  out.clusters = partition_commuting(out.hamiltonian, coloring);
  out.diagonalized = diagonalize_clusters(out.hamiltonian, out.clusters);
  return out;
}

Circuit compile_trotter(const CompiledHamiltonian& compiled, int order, double t, std::int64_t r,
                        const TrotterOptions& options) {
  TrotterPlan plan;
  plan.order = order;
  plan.t = t;
  plan.r = r;
  plan.clusters = compiled.clusters;
  return build_trotter_circuit(compiled.hamiltonian, plan, compiled.diagonalized, options);
}

ResourceReport step_resources(const CompiledHamiltonian& compiled, int order,
                              const RotationCostModel& model) {
  const Circuit step = compile_trotter(compiled, order, 1.0, 1);
  return transpile_clifford_t(step, model).second;
}

}  // namespace ssyk
