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

#include "ssyk/oracle.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace ssyk {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw std::length_error("dense operator refused: " + std::to_string(n) +
                            " qubits exceeds cap of " + std::to_string(cap));
  }
}

// Row operations shared by the matrix and state-vector paths; Rows is either
// a MatrixXcd (acting on every column) or a VectorXcd.
template <typename Rows>
void apply_gate_rows(Rows& m, std::uint32_t n, const Gate& g) {
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t ma = std::size_t{1} << (n - 1 - g.q0);
  switch (g.kind) {
    case GateKind::CNOT: {
      const std::size_t mt = std::size_t{1} << (n - 1 - g.q1);
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & ma) && !(i & mt)) m.row(i).swap(m.row(i | mt));
      }
      return;
    }
    case GateKind::CZ: {
      const std::size_t mb = std::size_t{1} << (n - 1 - g.q1);
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & ma) && (i & mb)) m.row(i) *= -1.0;
      }
      return;
    }
    default: {
      const Eigen::Matrix2cd u = single_qubit_matrix(g.kind, g.angle);
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & ma) continue;
        const std::size_t j = i | ma;
        auto r0 = m.row(i).eval();
        auto r1 = m.row(j).eval();
        m.row(i) = u(0, 0) * r0 + u(0, 1) * r1;
        m.row(j) = u(1, 0) * r0 + u(1, 1) * r1;
      }
      return;
    }
  }
}

}  // namespace

DenseOperator pauli_matrix(const PauliString& p) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    Eigen::Matrix2cd f;
    switch (p.at(q)) {
      case 'I': f << 1, 0, 0, 1; break;
      case 'X': f << 0, 1, 1, 0; break;
      case 'Y': f << 0, -kI, kI, 0; break;
      default: f << 1, 0, 0, -1; break;
    }
    Eigen::MatrixXcd next = Eigen::kroneckerProduct(m, f).eval();
    m = std::move(next);
  }
  return m * std::pow(kI, p.phase());
}

Eigen::Matrix2cd single_qubit_matrix(GateKind kind, double angle) {
  Eigen::Matrix2cd u;
  const double r = std::numbers::sqrt2 / 2;
  const cd t = std::polar(1.0, std::numbers::pi / 4);
  switch (kind) {
    case GateKind::H: u << r, r, r, -r; break;
    case GateKind::S: u << 1, 0, 0, kI; break;
    case GateKind::Sdg: u << 1, 0, 0, -kI; break;
    case GateKind::X: u << 0, 1, 1, 0; break;
    case GateKind::Z: u << 1, 0, 0, -1; break;
    case GateKind::T: u << 1, 0, 0, t; break;
    case GateKind::Tdg: u << 1, 0, 0, std::conj(t); break;
    case GateKind::Rz: u << std::polar(1.0, -angle / 2), 0, 0, std::polar(1.0, angle / 2); break;
    default: throw std::invalid_argument("single_qubit_matrix: two-qubit gate kind");
  }
  return u;
}

DenseOperator exact_unitary(const Eigen::MatrixXcd& hamiltonian, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hamiltonian);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  Eigen::VectorXcd phases = (-kI * t * es.eigenvalues().cast<cd>()).array().exp();
  const auto& v = es.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

DenseOperator exact_unitary(const PauliHamiltonian& h, double t, std::size_t max_qubits) {
  check_cap(h.n, max_qubits);
  return exact_unitary(hamiltonian_matrix(h, max_qubits), t);
}

DenseOperator circuit_unitary(const Circuit& c, std::size_t max_qubits) {
  check_cap(c.num_qubits(), max_qubits);
  const std::size_t dim = std::size_t{1} << c.num_qubits();
  DenseOperator u = DenseOperator::Identity(dim, dim);
  for (const auto& g : c.gates()) apply_gate_rows(u, c.num_qubits(), g);
  return u;
}

Eigen::VectorXcd apply_circuit(const Circuit& c, Eigen::VectorXcd state) {
  if (state.size() != (Eigen::Index{1} << c.num_qubits())) {
    throw std::invalid_argument("state length does not match circuit width");
  }
  for (const auto& g : c.gates()) apply_gate_rows(state, c.num_qubits(), g);
  return state;
}

double spectral_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::MatrixXcd gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double operator_norm_diff(const DenseOperator& u, const DenseOperator& v, PhaseMode mode) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw std::invalid_argument("operator_norm_diff: dimension mismatch");
  }
  if (mode == PhaseMode::IgnoreGlobalPhase) {
    cd overlap = (v.adjoint() * u).trace();
    cd phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cd{1.0};
    return spectral_norm(u - phase * v);
  }
  return spectral_norm(u - v);
}

}  // namespace ssyk
