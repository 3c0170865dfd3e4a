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
#include <string>
#include <string_view>
#include <vector>

#include "ssyk/circuit.hpp"
#include "ssyk/clustering.hpp"
#include "ssyk/diagonalizer.hpp"
#include "ssyk/syk_model.hpp"

namespace ssyk {

/// Product-formula schedule. Each cluster Hamiltonian H_j is one factor.
///
/// One order-1 step evolves clusters 0, 1, ..., m-1 for t/r each.
/// One order-2 step evolves 0, ..., m-1 and then m-1, ..., 0 for t/2r each,
/// so cluster m-1 sits at the center of the palindrome and cluster 0 at the
/// ends. Gates are in time order throughout.
struct TrotterPlan {
  int order = 2;
  double t = 1.0;
  std::int64_t r = 1;
  double epsilon = 0.01;
  std::vector<Cluster> clusters;

  void validate() const;
};

/// Steps needed for target error epsilon at dimensionless time Jt:
/// order 2: ceil((Jt)^{3/2} / sqrt(eps)), order 1: ceil((Jt)^2 / eps), min 1.
/// Values within 1e-9 relative of an integer are not bumped up by rounding.
std::int64_t plan_steps(int order, double jt, double epsilon);

struct TrotterOptions {
  /// Fuse adjacent evolutions of the same cluster (the order-2 center and
  /// the boundary between repetitions). Off by default so counts stay
  /// proportional to r.
  bool merge_adjacent = false;
};

/// Diagonalizes every cluster of h once.
std::vector<DiagonalizedCluster> diagonalize_clusters(const PauliHamiltonian& h,
                                                      const std::vector<Cluster>& clusters);

Circuit build_trotter_circuit(const PauliHamiltonian& h, const TrotterPlan& plan,
                              const TrotterOptions& options = {});
/// Variant reusing precomputed diagonalizations (aligned with plan.clusters).
Circuit build_trotter_circuit(const PauliHamiltonian& h, const TrotterPlan& plan,
                              const std::vector<DiagonalizedCluster>& diagonalized,
                              const TrotterOptions& options = {});

enum class BoundMethod { ExactCommutator, PauliAnalytic };

std::string_view to_string(BoundMethod m);
BoundMethod parse_bound_method(std::string_view name);

struct BoundOptions {
  /// Multiplies order-1 bounds by J^2 and order-2 bounds by J^3, the way the
  /// published formulas are printed. Off by default: the couplings already
  /// live inside the H_j, and only the unscaled form is a proven bound.
  bool coupling_prefactors = false;
  double J = 1.0;
};

struct ErrorBound {
  double value = 0.0;
  BoundMethod method = BoundMethod::ExactCommutator;
  int order = 1;
  double t = 0.0;
  std::int64_t r = 1;
  /// Contribution of each outer index p (cluster), summing to value.
  std::vector<double> components;
};

inline constexpr std::size_t kBoundQubitCap = 7;

/// Commutator-norm bound with dense spectral norms, H_p = cluster p:
///   order 1: t^2/(2r) sum_p ||[S_p, H_p]||
///   order 2: t^3/(12 r^2) sum_p ||[S_p, [S_p, H_p]]||
///          + t^3/(24 r^2) sum_p ||[H_p, [H_p, S_p]]||
/// with S_p = sum_{q>p} H_q. Refuses more than kBoundQubitCap qubits.
ErrorBound bound_error_exact(const PauliHamiltonian& h, const std::vector<Cluster>& clusters,
                             int order, double t, std::int64_t r, const BoundOptions& opts = {});

/// Same expression with every commutator expanded over Pauli pairs and
/// bounded by the triangle inequality (||[P,Q]|| = 2 for anticommuting
/// strings). Never below bound_error_exact; works at any size.
ErrorBound bound_error_pauli(const PauliHamiltonian& h, const std::vector<Cluster>& clusters,
                             int order, double t, std::int64_t r, const BoundOptions& opts = {});

/// {order, t, r, method, value, components[]}
std::string bound_to_json(const ErrorBound& b);

/// ||exp(-iHt) - U_circuit|| for the plan's circuit (dense; small n only).
double measure_trotter_error(const PauliHamiltonian& h, const TrotterPlan& plan,
                             const TrotterOptions& options = {});

}  // namespace ssyk
