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

#include <array>
#include <cstdint>

namespace ssyk {

/// Philox4x32-10 counter-based generator (Salmon et al., Random123).
///
/// A block is a pure function of (counter, key), so any quadruple's
/// deviates can be regenerated without touching any other stream.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
  static constexpr int kRounds = 10;

  static Counter block(Counter ctr, Key key);
};

/// Uniform in [0, 1) with 53 random bits, from two 32-bit words.
double unit_closed_open(std::uint32_t hi, std::uint32_t lo);
/// Uniform in (0, 1], same resolution.
double unit_open_closed(std::uint32_t hi, std::uint32_t lo);

}  // namespace ssyk
