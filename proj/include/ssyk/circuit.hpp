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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ssyk/gate.hpp"

namespace ssyk {

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::uint32_t n_qubits) : n_(n_qubits) {}

  std::uint32_t num_qubits() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Validates operands (< n, distinct for two-qubit gates) and Rz angles.
  void append(const Gate& g);
  /// Appends every gate of `other`, which must have the same width.
  void append(const Circuit& other);
  /// The adjoint: reversed order, each gate inverted.
  Circuit inverse() const;

  bool operator==(const Circuit&) const = default;

 private:
  std::uint32_t n_ = 0;
  std::vector<Gate> gates_;
};

/// Per-kind gate tallies of one circuit plus the Clifford+T accounting that
/// transpile_clifford_t adds.
///
/// The aggregate columns follow the three-column layout of the published
/// per-step table:
///   cnot_count            CNOT + CZ (both are one two-qubit entangler)
///   t_count               T + Tdg + T gates charged for generic rotations
///   clifford_plus_t_count H + CNOT + CZ + t_count + Clifford gates emitted
///                         when rewriting exact pi/4-multiple rotations +
///                         Clifford overhead charged for generic rotations
/// Diagonalizer S/Sdg gates are tallied per kind but not in the aggregate.
struct ResourceReport {
  std::array<std::int64_t, kNumGateKinds> by_kind{};
  std::int64_t rewrite_cliffords = 0;
  std::int64_t charged_rotations = 0;
  std::int64_t charged_t = 0;
  std::int64_t charged_clifford = 0;

  std::int64_t count(GateKind k) const { return by_kind[static_cast<std::size_t>(k)]; }
  std::int64_t cnot_count() const;
  std::int64_t t_count() const;
  std::int64_t clifford_plus_t_count() const;

  ResourceReport& operator+=(const ResourceReport& other);
  bool operator==(const ResourceReport&) const = default;
};

ResourceReport operator+(ResourceReport a, const ResourceReport& b);

/// Exact per-kind tallies; Rz is counted as its own kind.
ResourceReport count_gates(const Circuit& c);

/// Charges ceil(c1 * log2(1/eps_rot) + c0) T gates per generic rotation,
/// with the same number of H gates as Clifford overhead.
struct RotationCostModel {
  double eps_rot = 0.0668;
  double c1 = 3.0;
  double c0 = 0.0;

  std::int64_t t_per_rotation() const;
  std::int64_t clifford_per_rotation() const { return t_per_rotation(); }
};

inline constexpr double kCliffordAngleTolerance = 1e-12;

/// Rewrites Rz angles within kCliffordAngleTolerance of a multiple of pi/4
/// into {Z, S, Sdg, T, Tdg} (equal up to global phase), expands CZ into
/// H CNOT H, and keeps every other Rz in place while charging it through
/// `model`. Throws std::invalid_argument unless eps_rot lies in (0, 0.5).
std::pair<Circuit, ResourceReport> transpile_clifford_t(const Circuit& c,
                                                        const RotationCostModel& model = {});

/// OpenQASM 2.0 with a single register q; Rz angles with 17 significant
/// digits so that parse_qasm reproduces the circuit bit-for-bit.
std::string emit_qasm(const Circuit& c);

/// Reads the dialect emit_qasm writes: qelib1 gates h s sdg x z t tdg cx cz rz
/// on one register. Angle arguments may be decimal literals or simple
/// arithmetic over pi. Throws std::invalid_argument with a line number.
Circuit parse_qasm(std::string_view text);

}  // namespace ssyk
