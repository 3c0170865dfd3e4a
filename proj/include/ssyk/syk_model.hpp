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
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "ssyk/pauli.hpp"

namespace ssyk {

/// One quartic coupling J_abcd chi_a chi_b chi_c chi_d with 1 <= a<b<c<d <= N.
struct SykTerm {
  int a, b, c, d;
  double coupling;

  bool operator==(const SykTerm&) const = default;
};

/// How aggressively the dense model is pruned: either a retention
/// probability p directly, or a target average hypergraph degree k that is
/// converted with p = min(1, 24 k / N^3).
class Sparsity {
 public:
  static Sparsity probability(double p) { return Sparsity(p, std::nullopt); }
  static Sparsity degree(double k) { return Sparsity(0.0, k); }

  /// Resolves to a retention probability for N Majoranas.
  double retention(int N) const;
  std::optional<double> k_target() const { return k_; }

 private:
  Sparsity(double p, std::optional<double> k) : p_(p), k_(k) {}
  double p_;
  std::optional<double> k_;
};

double p_from_k(double k, int N);

struct SykInstance {
  int N = 0;
  double J = 1.0;
  double p = 1.0;
  std::optional<double> k_target;
  std::uint64_t seed = 0;
  std::vector<SykTerm> terms;

  int num_qubits() const { return N / 2; }
  /// Checks the structural invariants; throws std::invalid_argument.
  void validate() const;
  bool operator==(const SykInstance&) const = default;
};

struct PauliTerm {
  double coeff;
  PauliString op;
};

/// Sum of real-weighted Hermitian Pauli strings, all with phase 0.
struct PauliHamiltonian {
  std::size_t n = 0;
  std::vector<PauliTerm> terms;

  std::size_t size() const { return terms.size(); }
};

/// Jordan-Wigner image of Majorana chi_i (1-based) among N:
/// chi_{2r-1} = Z...Z X_r, chi_{2r} = Z...Z Y_r on N/2 qubits.
PauliString majorana_to_pauli(int i, int N);

/// Variance 6 J^2 / (p N^3) of a retained coupling.
double coupling_variance(int N, double J, double p);

/// Visits every C(N,4) quadruple in lexicographic order. Quadruple number r
/// owns Philox stream (key = seed, counter = (r, block)); its first
/// uniform decides retention (dropped if > p), and a kept quadruple then
/// draws one Box-Muller Gaussian from the same stream.
SykInstance sample_instance(int N, double J, Sparsity sparsity, std::uint64_t seed);

/// Maps each term to J_abcd times the JW image of chi_a chi_b chi_c chi_d,
/// folding the product's +-1 phase into the coefficient.
PauliHamiltonian jordan_wigner(const SykInstance& inst);

inline constexpr std::size_t kDefaultDenseQubitCap = 14;

/// Dense 2^n x 2^n matrix of sum coeff * op. Refuses n > cap.
Eigen::MatrixXcd hamiltonian_matrix(const PauliHamiltonian& h,
                                    std::size_t max_qubits = kDefaultDenseQubitCap);

/// Instance file: {N, J, p, k_target, seed, terms:[{a,b,c,d,J}]}.
/// Couplings are written as shortest round-trip decimals.
std::string instance_to_json(const SykInstance& inst);
SykInstance instance_from_json(std::string_view text);

}  // namespace ssyk
