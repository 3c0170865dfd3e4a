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
#include <optional>
#include <string>
#include <vector>

#include "ssyk/circuit.hpp"

namespace ssyk {

/// Count, sum and sum of squares; merging is associative and, for integer
/// samples below 2^26, exact.
struct RunningStat {
  std::int64_t n = 0;
  double sum = 0.0;
  double sum_sq = 0.0;

  void add(double x) {
    ++n;
    sum += x;
    sum_sq += x * x;
  }
  RunningStat& merge(const RunningStat& o) {
    n += o.n;
    sum += o.sum;
    sum_sq += o.sum_sq;
    return *this;
  }
  double mean() const { return n ? sum / static_cast<double>(n) : 0.0; }
  /// Standard error of the mean from the unbiased sample variance; absent
  /// below two samples.
  std::optional<double> std_error() const;
};

/// Disorder-averaged counts for one (N, sparsity, order) point.
struct ResourceSummary {
  int N = 0;
  std::optional<double> k;
  double p = 1.0;
  int order = 1;
  bool per_step = true;
  std::vector<std::uint64_t> seeds;
  RunningStat cnot;
  RunningStat clifford_plus_t;
  RunningStat t;
  RunningStat terms;
  RunningStat clusters;

  void add_sample(std::uint64_t seed, const ResourceReport& r, std::size_t num_terms,
                  std::size_t num_clusters);
  /// Combines shards of the same point; seeds are concatenated in order.
  ResourceSummary& merge(const ResourceSummary& other);
};

/// N,k,p,seed_count,order,cnot_mean,cnot_se,cliffT_mean,cliffT_se,t_mean,t_se
std::string resource_csv_header();
std::string resource_csv_row(const ResourceSummary& s);

}  // namespace ssyk
