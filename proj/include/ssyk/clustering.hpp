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

#include "ssyk/syk_model.hpp"

namespace ssyk {

/// Indices into PauliHamiltonian::terms, ascending. All members commute.
struct Cluster {
  std::vector<std::uint32_t> term_indices;

  bool operator==(const Cluster&) const = default;
};

/// Anticommutation graph: an edge joins two terms that do not commute.
class CommutationGraph {
 public:
  CommutationGraph() = default;
  explicit CommutationGraph(std::size_t m) : adj_(m) {}

  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const;
  std::size_t degree(std::uint32_t v) const { return adj_[v].size(); }
  std::size_t max_degree() const;
  const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const { return adj_[v]; }
  bool has_edge(std::uint32_t u, std::uint32_t v) const;

  /// Neighbor lists must stay sorted; call after adding all edges.
  void add_edge(std::uint32_t u, std::uint32_t v);
  void finalize();

 private:
  std::vector<std::vector<std::uint32_t>> adj_;
};

CommutationGraph build_commutation_graph(const PauliHamiltonian& h);

enum class ColoringStrategy {
  /// Welsh-Powell: vertices by descending degree, ties by index.
  DescendingDegree,
  /// Vertices in term order.
  InputOrder,
  /// Brelaz DSATUR: highest saturation, then degree, then index.
  Saturation,
};

ColoringStrategy parse_coloring_strategy(std::string_view name);
std::string_view to_string(ColoringStrategy s);

/// Greedy coloring with lowest-available color; one cluster per color, in
/// color order. Deterministic for a fixed strategy and input.
std::vector<Cluster> partition_commuting(const CommutationGraph& graph,
                                         ColoringStrategy strategy = ColoringStrategy::DescendingDegree);
std::vector<Cluster> partition_commuting(const PauliHamiltonian& h,
                                         ColoringStrategy strategy = ColoringStrategy::DescendingDegree);

/// Throws std::logic_error naming the first violated invariant (coverage,
/// disjointness, or an anticommuting pair inside a cluster).
void audit_partition(const PauliHamiltonian& h, const std::vector<Cluster>& clusters);

/// Debug dump: {"clusters": [[i, j, ...], ...]}.
std::string partition_to_json(const std::vector<Cluster>& clusters);

}  // namespace ssyk
