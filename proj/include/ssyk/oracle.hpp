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

// Dense-matrix ground truth used to certify circuits and error bounds on
// small instances. Qubit q is bit (n-1-q) of a basis index, i.e. qubit 0 is
// the leftmost Kronecker factor, matching PauliString.

#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "ssyk/circuit.hpp"
#include "ssyk/pauli.hpp"
#include "ssyk/syk_model.hpp"

namespace ssyk {

using DenseOperator = Eigen::MatrixXcd;

/// Builds the matrix as a Kronecker product of 2x2 factors times i^phase.
DenseOperator pauli_matrix(const PauliString& p);

/// 2x2 matrix of a single-qubit gate kind (angle used for Rz only).
Eigen::Matrix2cd single_qubit_matrix(GateKind kind, double angle = 0.0);

/// exp(-i H t) via Hermitian eigendecomposition.
DenseOperator exact_unitary(const PauliHamiltonian& h, double t,
                            std::size_t max_qubits = kDefaultDenseQubitCap);
DenseOperator exact_unitary(const Eigen::MatrixXcd& hamiltonian, double t);

/// Ordered product of the gates, last gate leftmost.
DenseOperator circuit_unitary(const Circuit& c, std::size_t max_qubits = kDefaultDenseQubitCap);

/// Applies the gates one by one to a state vector of length 2^n.
Eigen::VectorXcd apply_circuit(const Circuit& c, Eigen::VectorXcd state);

/// Largest singular value, from the top eigenvalue of M^dagger M.
double spectral_norm(const Eigen::MatrixXcd& m);

enum class PhaseMode {
  Exact,
  /// Debug aid: compares after aligning V's global phase to U.
  IgnoreGlobalPhase,
};

/// Spectral norm of U - V. Throws std::invalid_argument on shape mismatch.
double operator_norm_diff(const DenseOperator& u, const DenseOperator& v,
                          PhaseMode mode = PhaseMode::Exact);

}  // namespace ssyk
