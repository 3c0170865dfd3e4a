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

#include "ssyk/rng.hpp"

namespace ssyk {

Philox4x32::Counter Philox4x32::block(Counter ctr, Key key) {
  for (int round = 0; round < kRounds; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
    std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
    auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    auto lo0 = static_cast<std::uint32_t>(p0);
    auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    auto lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

namespace {
constexpr double kTwoPowMinus53 = 1.0 / 9007199254740992.0;

std::uint64_t top53(std::uint32_t hi, std::uint32_t lo) {
  return ((std::uint64_t{hi} << 32) | lo) >> 11;
}
}  // namespace

double unit_closed_open(std::uint32_t hi, std::uint32_t lo) {
  return static_cast<double>(top53(hi, lo)) * kTwoPowMinus53;
}

double unit_open_closed(std::uint32_t hi, std::uint32_t lo) {
  return static_cast<double>(top53(hi, lo) + 1) * kTwoPowMinus53;
}

}  // namespace ssyk
