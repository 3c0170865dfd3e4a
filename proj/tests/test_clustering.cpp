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

#include <gtest/gtest.h>

#include <algorithm>

#include "ssyk/clustering.hpp"
#include "support.hpp"

namespace ssyk {
namespace {

PauliHamiltonian from_labels(std::initializer_list<const char*> labels) {
  PauliHamiltonian h;
  for (const char* l : labels) {
    h.terms.push_back({1.0, PauliString::from_string(l)});
    h.n = h.terms.back().op.num_qubits();
  }
  return h;
}

TEST(CommutationGraph, AllZHasNoEdges) {
  const auto h = from_labels({"ZII", "IZZ", "ZZZ", "IIZ"});
  const auto g = build_commutation_graph(h);
  EXPECT_EQ(g.num_vertices(), 4u);
  EXPECT_EQ(g.num_edges(), 0u);
  const auto clusters = partition_commuting(h);
  ASSERT_EQ(clusters.size(), 1u);
  EXPECT_EQ(clusters[0].term_indices, (std::vector<std::uint32_t>{0, 1, 2, 3}));
}

TEST(CommutationGraph, SingleEdge) {
  const auto g = build_commutation_graph(from_labels({"X", "Z"}));
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 0));
}

TEST(CommutationGraph, EdgesMatchMatrixCommutators) {
  const auto h = jordan_wigner(sample_instance(10, 1.0, Sparsity::probability(0.3), 2));
  const auto g = build_commutation_graph(h);
  std::vector<testing::Mat> mats;
  for (const auto& t : h.terms) mats.push_back(testing::dense(t.op));
  std::size_t edges = 0;
  for (std::uint32_t i = 0; i < h.size(); ++i) {
    for (std::uint32_t j = i + 1; j < h.size(); ++j) {
      const bool anti = (mats[i] * mats[j] - mats[j] * mats[i]).norm() > 1e-9;
      EXPECT_EQ(g.has_edge(i, j), anti);
      edges += anti;
    }
  }
  EXPECT_EQ(g.num_edges(), edges);
}

TEST(Partition, CompleteGraphGivesSingletons) {
  // X, Y, Z pairwise anticommute.
  const auto clusters = partition_commuting(from_labels({"X", "Y", "Z"}));
  EXPECT_EQ(clusters.size(), 3u);
  for (const auto& c : clusters) EXPECT_EQ(c.term_indices.size(), 1u);
}

TEST(Partition, EmptyHamiltonian) {
  PauliHamiltonian h;
  h.n = 2;
  EXPECT_TRUE(partition_commuting(h).empty());
}

TEST(Partition, DescendingDegreeOrder) {
  // Term 2 (X on both) anticommutes with 0 and 1, so it is colored first.
  const auto clusters = partition_commuting(from_labels({"ZI", "IZ", "XX"}));
  ASSERT_EQ(clusters.size(), 2u);
  EXPECT_EQ(clusters[0].term_indices, (std::vector<std::uint32_t>{2}));
  EXPECT_EQ(clusters[1].term_indices, (std::vector<std::uint32_t>{0, 1}));
}

TEST(Partition, StrategiesParse) {
  EXPECT_EQ(parse_coloring_strategy("degree"), ColoringStrategy::DescendingDegree);
  EXPECT_EQ(parse_coloring_strategy("input"), ColoringStrategy::InputOrder);
  EXPECT_EQ(parse_coloring_strategy("dsatur"), ColoringStrategy::Saturation);
  EXPECT_THROW(parse_coloring_strategy("best"), std::invalid_argument);
  for (auto s : {ColoringStrategy::DescendingDegree, ColoringStrategy::InputOrder,
                 ColoringStrategy::Saturation}) {
    EXPECT_EQ(parse_coloring_strategy(to_string(s)), s);
  }
}

TEST(Partition, ValidCoverAndGreedyBoundOnRandomInstances) {
  for (auto strategy : {ColoringStrategy::DescendingDegree, ColoringStrategy::InputOrder,
                        ColoringStrategy::Saturation}) {
    for (int seed = 1; seed <= 10; ++seed) {
      for (int N : {6, 8, 10, 12}) {
        const auto h = jordan_wigner(sample_instance(N, 1.0, Sparsity::degree(8.7), seed));
        const auto g = build_commutation_graph(h);
        const auto clusters = partition_commuting(g, strategy);
        EXPECT_NO_THROW(audit_partition(h, clusters));
        EXPECT_LE(clusters.size(), g.max_degree() + 1);
        std::vector<std::uint32_t> all;
        for (const auto& c : clusters) {
          EXPECT_TRUE(std::is_sorted(c.term_indices.begin(), c.term_indices.end()));
          for (auto i : c.term_indices) {
            for (auto j : c.term_indices) EXPECT_TRUE(commutes(h.terms[i].op, h.terms[j].op));
          }
          all.insert(all.end(), c.term_indices.begin(), c.term_indices.end());
        }
        std::sort(all.begin(), all.end());
        ASSERT_EQ(all.size(), h.size());
        for (std::uint32_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i], i);
        EXPECT_EQ(partition_commuting(g, strategy), clusters);
      }
    }
  }
}

TEST(Partition, AuditCatchesViolations) {
  const auto h = from_labels({"X", "Z", "I"});
  EXPECT_THROW(audit_partition(h, {Cluster{{0, 1}}, Cluster{{2}}}), std::logic_error);
  EXPECT_THROW(audit_partition(h, {Cluster{{0}}, Cluster{{2}}}), std::logic_error);
  EXPECT_THROW(audit_partition(h, {Cluster{{0, 2}}, Cluster{{1, 2}}}), std::logic_error);
  EXPECT_NO_THROW(audit_partition(h, {Cluster{{0, 2}}, Cluster{{1}}}));
}

TEST(Partition, JsonDump) {
  EXPECT_EQ(partition_to_json({Cluster{{0, 2}}, Cluster{{1}}}), "{\"clusters\":[[0,2],[1]]}\n");
}

}  // namespace
}  // namespace ssyk
