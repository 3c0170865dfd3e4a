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

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace ssyk {

/// Gate kinds of the circuit IR. The first seven are the Clifford gates
/// accepted by PauliString::conjugate.
enum class GateKind : std::uint8_t { H, S, Sdg, CNOT, CZ, X, Z, T, Tdg, Rz };

inline constexpr std::size_t kNumGateKinds = 10;

struct Gate {
  GateKind kind;
  std::uint32_t q0 = 0;
  /// Target for CNOT, second operand for CZ; unused otherwise.
  std::uint32_t q1 = 0;
  /// Rz(angle) = exp(-i angle/2 Z), radians.
  double angle = 0.0;

  bool is_two_qubit() const { return kind == GateKind::CNOT || kind == GateKind::CZ; }
  bool operator==(const Gate&) const = default;

  static Gate h(std::uint32_t q) { return {GateKind::H, q, 0, 0.0}; }
  static Gate s(std::uint32_t q) { return {GateKind::S, q, 0, 0.0}; }
  static Gate sdg(std::uint32_t q) { return {GateKind::Sdg, q, 0, 0.0}; }
  static Gate x(std::uint32_t q) { return {GateKind::X, q, 0, 0.0}; }
  static Gate z(std::uint32_t q) { return {GateKind::Z, q, 0, 0.0}; }
  static Gate t(std::uint32_t q) { return {GateKind::T, q, 0, 0.0}; }
  static Gate tdg(std::uint32_t q) { return {GateKind::Tdg, q, 0, 0.0}; }
  static Gate cnot(std::uint32_t c, std::uint32_t t) { return {GateKind::CNOT, c, t, 0.0}; }
  static Gate cz(std::uint32_t a, std::uint32_t b) { return {GateKind::CZ, a, b, 0.0}; }
  static Gate rz(std::uint32_t q, double angle) { return {GateKind::Rz, q, 0, angle}; }
};

bool is_clifford(GateKind kind);

/// OpenQASM 2.0 mnemonic ("h", "sdg", "cx", "rz", ...).
std::string_view qasm_name(GateKind kind);

/// S <-> Sdg, T <-> Tdg, Rz(a) -> Rz(-a); the rest are self-inverse.
Gate inverse(const Gate& g);

}  // namespace ssyk
