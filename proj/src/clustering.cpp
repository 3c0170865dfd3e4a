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

#include "ssyk/clustering.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace ssyk {

std::size_t CommutationGraph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& nb : adj_) twice += nb.size();
  return twice / 2;
}

std::size_t CommutationGraph::max_degree() const {
  std::size_t d = 0;
  for (const auto& nb : adj_) d = std::max(d, nb.size());
  return d;
}

bool CommutationGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

void CommutationGraph::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u == v) throw std::invalid_argument("self-loop in commutation graph");
  adj_.at(u).push_back(v);
  adj_.at(v).push_back(u);
}

void CommutationGraph::finalize() {
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
}

CommutationGraph build_commutation_graph(const PauliHamiltonian& h) {
  const auto m = static_cast<std::uint32_t>(h.terms.size());
  CommutationGraph g(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = i + 1; j < m; ++j) {
      if (!commutes(h.terms[i].op, h.terms[j].op)) g.add_edge(i, j);
    }
  }
  g.finalize();
  return g;
}

ColoringStrategy parse_coloring_strategy(std::string_view name) {
  if (name == "degree" || name == "descending-degree") return ColoringStrategy::DescendingDegree;
  if (name == "input" || name == "input-order") return ColoringStrategy::InputOrder;
  if (name == "dsatur" || name == "saturation") return ColoringStrategy::Saturation;
  throw std::invalid_argument("unknown coloring strategy '" + std::string(name) + "'");
}

std::string_view to_string(ColoringStrategy s) {
  switch (s) {
    case ColoringStrategy::DescendingDegree: return "degree";
    case ColoringStrategy::InputOrder: return "input";
    case ColoringStrategy::Saturation: return "dsatur";
  }
  return "?";
}

namespace {

constexpr std::uint32_t kUncolored = ~std::uint32_t{0};

std::uint32_t lowest_free_color(const CommutationGraph& g, std::uint32_t v,
                                const std::vector<std::uint32_t>& color,
                                std::vector<std::uint32_t>& mark, std::uint32_t stamp) {
  for (auto u : g.neighbors(v)) {
    if (color[u] != kUncolored) mark[color[u]] = stamp;
  }
  std::uint32_t c = 0;
  while (mark[c] == stamp) ++c;
  return c;
}

std::vector<std::uint32_t> color_sequential(const CommutationGraph& g,
                                            const std::vector<std::uint32_t>& order) {
  const std::size_t m = g.num_vertices();
  std::vector<std::uint32_t> color(m, kUncolored);
  std::vector<std::uint32_t> mark(m + 1, 0);
  std::uint32_t stamp = 0;
  for (auto v : order) color[v] = lowest_free_color(g, v, color, mark, ++stamp);
  return color;
}

std::vector<std::uint32_t> color_dsatur(const CommutationGraph& g) {
  const std::size_t m = g.num_vertices();
  std::vector<std::uint32_t> color(m, kUncolored);
  std::vector<std::vector<bool>> seen(m);
  std::vector<std::size_t> saturation(m, 0);
  std::vector<std::uint32_t> mark(m + 1, 0);
  std::uint32_t stamp = 0;
  for (std::size_t step = 0; step < m; ++step) {
    std::uint32_t best = kUncolored;
    for (std::uint32_t v = 0; v < m; ++v) {
      if (color[v] != kUncolored) continue;
      if (best == kUncolored || saturation[v] > saturation[best] ||
          (saturation[v] == saturation[best] && g.degree(v) > g.degree(best))) {
        best = v;
      }
    }
    const std::uint32_t c = lowest_free_color(g, best, color, mark, ++stamp);
    color[best] = c;
    for (auto u : g.neighbors(best)) {
      auto& s = seen[u];
      if (s.size() <= c) s.resize(c + 1, false);
      if (!s[c]) {
        s[c] = true;
        ++saturation[u];
      }
    }
  }
  return color;
}

}  // namespace

std::vector<Cluster> partition_commuting(const CommutationGraph& graph, ColoringStrategy strategy) {
  const std::size_t m = graph.num_vertices();
  std::vector<std::uint32_t> color;
  if (strategy == ColoringStrategy::Saturation) {
    color = color_dsatur(graph);
  } else {
    std::vector<std::uint32_t> order(m);
    std::iota(order.begin(), order.end(), 0u);
    if (strategy == ColoringStrategy::DescendingDegree) {
      std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return graph.degree(a) > graph.degree(b);
      });
    }
    color = color_sequential(graph, order);
  }
  std::uint32_t num_colors = 0;
  for (auto c : color) num_colors = std::max(num_colors, c + 1);
  std::vector<Cluster> clusters(num_colors);
  for (std::uint32_t v = 0; v < m; ++v) clusters[color[v]].term_indices.push_back(v);
  return clusters;
}

std::vector<Cluster> partition_commuting(const PauliHamiltonian& h, ColoringStrategy strategy) {
  return partition_commuting(build_commutation_graph(h), strategy);
}

void audit_partition(const PauliHamiltonian& h, const std::vector<Cluster>& clusters) {
  std::vector<int> hits(h.terms.size(), 0);
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    const auto& idx = clusters[c].term_indices;
    if (idx.empty()) throw std::logic_error("cluster " + std::to_string(c) + " is empty");
    for (auto i : idx) {
      if (i >= h.terms.size()) throw std::logic_error("cluster index out of range");
      ++hits[i];
    }
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        if (!commutes(h.terms[idx[a]].op, h.terms[idx[b]].op)) {
          throw std::logic_error("cluster " + std::to_string(c) + " holds anticommuting terms " +
                                 std::to_string(idx[a]) + " and " + std::to_string(idx[b]));
        }
      }
    }
  }
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (hits[i] != 1) {
      throw std::logic_error("term " + std::to_string(i) + " covered " + std::to_string(hits[i]) +
                             " times by the partition");
    }
  }
}

std::string partition_to_json(const std::vector<Cluster>& clusters) {
  nlohmann::json j;
  j["clusters"] = nlohmann::json::array();
  for (const auto& c : clusters) j["clusters"].push_back(c.term_indices);
  return j.dump() + "\n";
}

}  // namespace ssyk
