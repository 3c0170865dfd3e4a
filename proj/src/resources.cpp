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

#include "ssyk/resources.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ssyk {

std::optional<double> RunningStat::std_error() const {
  if (n < 2) return std::nullopt;
  const double nn = static_cast<double>(n);
  const double var = std::max(0.0, (sum_sq - sum * sum / nn) / (nn - 1.0));
  return std::sqrt(var / nn);
}

void ResourceSummary::add_sample(std::uint64_t seed, const ResourceReport& r,
                                 std::size_t num_terms, std::size_t num_clusters) {
  seeds.push_back(seed);
  cnot.add(static_cast<double>(r.cnot_count()));
  clifford_plus_t.add(static_cast<double>(r.clifford_plus_t_count()));
  t.add(static_cast<double>(r.t_count()));
  terms.add(static_cast<double>(num_terms));
  clusters.add(static_cast<double>(num_clusters));
}

ResourceSummary& ResourceSummary::merge(const ResourceSummary& o) {
  if (o.N != N || o.order != order || o.per_step != per_step || o.p != p) {
    throw std::invalid_argument("cannot merge summaries of different sweep points");
  }
  seeds.insert(seeds.end(), o.seeds.begin(), o.seeds.end());
  cnot.merge(o.cnot);
  clifford_plus_t.merge(o.clifford_plus_t);
  t.merge(o.t);
  terms.merge(o.terms);
  clusters.merge(o.clusters);
  return *this;
}

std::string resource_csv_header() {
  return "N,k,p,seed_count,order,cnot_mean,cnot_se,cliffT_mean,cliffT_se,t_mean,t_se\n";
}

namespace {

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string num(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

}  // namespace

std::string resource_csv_row(const ResourceSummary& s) {
  std::string row = std::to_string(s.N) + "," + num(s.k) + "," + num(s.p) + "," +
                    std::to_string(s.seeds.size()) + "," + std::to_string(s.order);
  for (const RunningStat* st : {&s.cnot, &s.clifford_plus_t, &s.t}) {
    row += "," + num(st->mean()) + "," + num(st->std_error());
  }
  return row + "\n";
}

}  // namespace ssyk
