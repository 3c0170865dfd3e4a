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

#include "ssyk/gate.hpp"

namespace ssyk {

bool is_clifford(GateKind kind) {
  switch (kind) {
    case GateKind::H:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::X:
    case GateKind::Z:
      return true;
    default:
      return false;
  }
}

std::string_view qasm_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::CNOT: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::X: return "x";
    case GateKind::Z: return "z";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::Rz: return "rz";
  }
  return "?";
}

Gate inverse(const Gate& g) {
  Gate inv = g;
  switch (g.kind) {
    case GateKind::S: inv.kind = GateKind::Sdg; break;
    case GateKind::Sdg: inv.kind = GateKind::S; break;
    case GateKind::T: inv.kind = GateKind::Tdg; break;
    case GateKind::Tdg: inv.kind = GateKind::T; break;
    case GateKind::Rz: inv.angle = -g.angle; break;
    default: break;
  }
  return inv;
}

}  // namespace ssyk
