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

// Test-side reference implementations. Nothing here calls into the library's
// matrix code: Pauli matrices come from explicit 2x2 factors, gates are
// embedded by index arithmetic, and exp(-iHt) uses a scaled Taylor series.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ssyk/circuit.hpp"
#include "ssyk/pauli.hpp"
#include "ssyk/syk_model.hpp"

namespace ssyk::testing {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline Mat factor(char c) {
  Mat m = Mat::Zero(2, 2);
  const cd i(0, 1);
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

/// Dense matrix of a label like "-iXZY" (qubit 0 leftmost).
inline Mat dense(const std::string& label) {
  std::size_t pos = 0;
  cd phase = 1;
  if (pos < label.size() && (label[pos] == '+' || label[pos] == '-')) {
    if (label[pos] == '-') phase = -1;
    ++pos;
  }
  if (pos < label.size() && label[pos] == 'i') {
    phase *= cd(0, 1);
    ++pos;
  }
  Mat m = Mat::Identity(1, 1);
  for (; pos < label.size(); ++pos) m = kron(m, factor(label[pos]));
  return phase * m;
}

inline Mat dense(const PauliString& p) {
  std::string label;
  for (std::size_t q = 0; q < p.num_qubits(); ++q) label += p.at(q);
  const cd phases[4] = {1, cd(0, 1), -1, cd(0, -1)};
  return phases[p.phase()] * dense(label);
}

/// Full 2^n matrix of one gate; qubit q is bit (n-1-q) of the index.
inline Mat gate_matrix(const Gate& g, std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  Mat u = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  const double s = 1.0 / std::sqrt(2.0);
  const cd i(0, 1);
  auto bit = [n](std::size_t idx, std::uint32_t q) { return (idx >> (n - 1 - q)) & 1u; };
  auto flip = [n](std::size_t idx, std::uint32_t q) { return idx ^ (std::size_t{1} << (n - 1 - q)); };
  for (std::size_t col = 0; col < dim; ++col) {
    const auto b0 = bit(col, g.q0);
    const auto c = static_cast<Eigen::Index>(col);
    switch (g.kind) {
      case GateKind::H:
        u(static_cast<Eigen::Index>(col & ~(std::size_t{1} << (n - 1 - g.q0))), c) += s;
        u(static_cast<Eigen::Index>(col | (std::size_t{1} << (n - 1 - g.q0))), c) += b0 ? -s : s;
        break;
      case GateKind::S: u(c, c) = b0 ? i : cd(1); break;
      case GateKind::Sdg: u(c, c) = b0 ? -i : cd(1); break;
      case GateKind::T: u(c, c) = b0 ? std::exp(i * (M_PI / 4)) : cd(1); break;
      case GateKind::Tdg: u(c, c) = b0 ? std::exp(-i * (M_PI / 4)) : cd(1); break;
      case GateKind::Z: u(c, c) = b0 ? -1.0 : 1.0; break;
      case GateKind::X: u(static_cast<Eigen::Index>(flip(col, g.q0)), c) = 1; break;
      case GateKind::Rz: u(c, c) = std::exp(i * (b0 ? g.angle / 2 : -g.angle / 2)); break;
      case GateKind::CNOT:
        u(static_cast<Eigen::Index>(b0 ? flip(col, g.q1) : col), c) = 1;
        break;
      case GateKind::CZ: u(c, c) = (b0 && bit(col, g.q1)) ? -1.0 : 1.0; break;
    }
  }
  return u;
}

inline Mat circuit_matrix(const Circuit& c) {
  const std::size_t dim = std::size_t{1} << c.num_qubits();
  Mat u = Mat::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& g : c.gates()) u = gate_matrix(g, c.num_qubits()) * u;
  return u;
}

inline Mat hamiltonian_dense(const PauliHamiltonian& h) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << h.n);
  Mat m = Mat::Zero(dim, dim);
  for (const auto& t : h.terms) m += t.coeff * dense(t.op);
  return m;
}

/// exp(-i H t) by scaling, 30-term Taylor series and squaring.
inline Mat expm_taylor(const Mat& h, double t) {
  Mat a = cd(0, -t) * h;
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm / std::pow(2.0, squarings) > 0.25) ++squarings;
  a /= std::pow(2.0, squarings);
  Mat term = Mat::Identity(h.rows(), h.cols());
  Mat sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = term * a / static_cast<double>(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

/// Largest singular value via Jacobi SVD (independent of the library norm).
inline double opnorm(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(0);
}

inline PauliString random_pauli(std::size_t n, std::mt19937_64& rng, bool hermitian = false) {
  static const char letters[] = "IXYZ";
  std::string s = hermitian ? (rng() & 1 ? "+" : "-") : std::string();
  if (!hermitian) {
    static const char* prefixes[] = {"+", "-", "+i", "-i"};
    s = prefixes[rng() % 4];
  }
  for (std::size_t q = 0; q < n; ++q) s += letters[rng() % 4];
  return PauliString::from_string(s);
}

}  // namespace ssyk::testing
