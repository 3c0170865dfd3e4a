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
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ssyk/clustering.hpp"
#include "ssyk/trotter.hpp"

namespace ssyk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitCertification = 3;

struct RunConfig {
  std::string command;
  std::vector<int> N;
  std::vector<double> k;  // exactly one of k, p is non-empty
  std::vector<double> p;
  double J = 1.0;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> instances;  // instance files used instead of sampling
  int order = 2;
  double t = 1.0;
  std::optional<std::int64_t> r;  // default: plan_steps(order, J t, epsilon)
  double epsilon = 0.01;
  double eps_rot = 0.0668;
  ColoringStrategy coloring = ColoringStrategy::DescendingDegree;
  std::string bound = "both";  // exact | pauli | both
  bool coupling_prefactors = false;
  std::string out;
  unsigned threads = 0;  // 0: hardware concurrency

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
  /// Canonical JSON of everything that affects results (not out, threads).
  std::string canonical_json() const;
  /// 64-bit FNV-1a of canonical_json(), as 16 hex digits.
  std::string hash() const;
  std::int64_t steps() const;
};

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

/// Runs one invocation; args exclude the program name. Returns an exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ssyk::cli
