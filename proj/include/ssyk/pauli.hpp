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
#include <string>
#include <string_view>
#include <vector>

#include "ssyk/gate.hpp"

namespace ssyk {

/// An n-qubit Pauli operator i^phase * P_0 (x) P_1 (x) ... (x) P_{n-1}.
///
/// Each qubit carries an (x, z) bit pair: (0,0)=I, (1,0)=X, (0,1)=Z,
/// (1,1)=Y. Y is stored directly (not as XZ), so a string is Hermitian
/// exactly when the phase is even. Qubit 0 is the leftmost Kronecker
/// factor. Bits are packed 64 per word; unused high bits are always zero.
class PauliString {
 public:
  PauliString() = default;
  /// Identity on n qubits.
  explicit PauliString(std::size_t n);

  /// Parses "+XYZI", "-ZZ", "+iX", "-iY", or an unsigned "XZ".
  /// '_' is accepted as an alias for I.
  static PauliString from_string(std::string_view text);
  /// Builds from packed words; high bits past n must be clear.
  static PauliString from_words(std::size_t n, std::vector<std::uint64_t> xs,
                                std::vector<std::uint64_t> zs, int phase);

  std::size_t num_qubits() const { return n_; }
  /// Exponent k of the global factor i^k, in {0,1,2,3}.
  int phase() const { return phase_; }
  void set_phase(int k) { phase_ = static_cast<std::uint8_t>(((k % 4) + 4) % 4); }

  bool x(std::size_t q) const { return (xs_[q >> 6] >> (q & 63)) & 1u; }
  bool z(std::size_t q) const { return (zs_[q >> 6] >> (q & 63)) & 1u; }
  void set_x(std::size_t q, bool v);
  void set_z(std::size_t q, bool v);
  /// Sets qubit q to one of 'I', 'X', 'Y', 'Z'.
  void set(std::size_t q, char pauli);
  char at(std::size_t q) const;

  const std::vector<std::uint64_t>& x_words() const { return xs_; }
  const std::vector<std::uint64_t>& z_words() const { return zs_; }

  /// Number of non-identity factors.
  std::size_t weight() const;
  bool is_identity_up_to_phase() const;
  bool has_x_part() const;
  bool is_hermitian() const { return (phase_ & 1) == 0; }
  /// +1 or -1 for Hermitian strings. Throws for phases +-i.
  int sign() const;

  /// Qubits where the factor is not I, ascending.
  std::vector<std::uint32_t> support() const;

  /// Applies g P g^dagger in place. Only the Clifford kinds
  /// {H, S, Sdg, CNOT, CZ, X, Z} are accepted.
  void conjugate(const Gate& g);

  /// Label with sign prefix, e.g. "+ZZXII", "-iY".
  std::string str() const;

  bool operator==(const PauliString&) const = default;

 private:
  void check_qubit(std::size_t q) const;

  std::size_t n_ = 0;
  std::uint8_t phase_ = 0;
  std::vector<std::uint64_t> xs_;
  std::vector<std::uint64_t> zs_;
};

/// Phase-exact operator product P * Q.
PauliString multiply(const PauliString& p, const PauliString& q);

/// True iff P and Q commute as operators (symplectic form vanishes).
bool commutes(const PauliString& p, const PauliString& q);

/// Returns g P g^dagger.
PauliString conjugate_by_gate(PauliString p, const Gate& g);

inline std::size_t weight(const PauliString& p) { return p.weight(); }

}  // namespace ssyk
