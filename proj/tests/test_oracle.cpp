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

#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "ssyk/clustering.hpp"
#include "ssyk/diagonalizer.hpp"
#include "ssyk/oracle.hpp"
#include "support.hpp"

namespace ssyk {
namespace {

using testing::Mat;
using cd = std::complex<double>;

Mat random_unitary(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = cd(g(rng), g(rng));
  }
  Eigen::HouseholderQR<Mat> qr(a);
  return qr.householderQ();
}

TEST(PauliMatrix, MatchesKroneckerReference) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = testing::random_pauli(1 + rng() % 5, rng);
    EXPECT_LT((pauli_matrix(p) - testing::dense(p)).norm(), 1e-15);
  }
}

TEST(ExactUnitary, ZeroHamiltonianIsIdentity) {
  PauliHamiltonian h{3, {}};
  EXPECT_LT((exact_unitary(h, 2.0) - Mat::Identity(8, 8)).norm(), 1e-14);
}

TEST(ExactUnitary, HalfTurnOfZ) {
  const double t = 0.7;
  PauliHamiltonian h{1, {{std::numbers::pi / (2 * t), PauliString::from_string("Z")}}};
  Mat expected = Mat::Zero(2, 2);
  expected(0, 0) = cd(0, -1);
  expected(1, 1) = cd(0, 1);
  EXPECT_LT((exact_unitary(h, t) - expected).norm(), 1e-14);
}

TEST(ExactUnitary, MatchesTaylorReferenceAndComposes) {
  const auto h = jordan_wigner(sample_instance(8, 1.0, Sparsity::probability(1.0), 5));
  const Mat u = exact_unitary(h, 0.8);
  EXPECT_LT((u - testing::expm_taylor(testing::hamiltonian_dense(h), 0.8)).norm(), 1e-10);
  EXPECT_LT((u.adjoint() * u - Mat::Identity(16, 16)).norm(), 1e-10);
  EXPECT_LT((exact_unitary(h, 0.3) * exact_unitary(h, 0.5) - u).norm(), 1e-9);
}

TEST(ExactUnitary, EigenphasesFollowSpectrum) {
  const auto h = jordan_wigner(sample_instance(8, 1.0, Sparsity::probability(1.0), 6));
  const Mat hm = testing::hamiltonian_dense(h);
  Eigen::SelfAdjointEigenSolver<Mat> es(hm);
  const double t = 0.4;
  const Mat u = exact_unitary(h, t);
  // U = V e^{-i Lambda t} V^dagger.
  const Mat v = es.eigenvectors();
  Mat d = v.adjoint() * u * v;
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    EXPECT_LT(std::abs(d(i, i) - std::exp(cd(0, -es.eigenvalues()(i) * t))), 1e-10);
  }
  EXPECT_NEAR(es.eigenvalues().sum(), 0.0, 1e-10);  // traceless
}

TEST(ExactUnitary, KramersPairsAtTwelveMajoranas) {
  // N = 4 mod 8: the particle-hole operator squares to -1 and commutes with
  // H, so every eigenphase of U appears twice.
  const auto h = jordan_wigner(sample_instance(12, 1.0, Sparsity::probability(1.0), 2));
  const Mat u = exact_unitary(h, 0.9);
  Eigen::ComplexEigenSolver<Mat> es(u);
  std::vector<double> phases;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    EXPECT_NEAR(std::abs(es.eigenvalues()(i)), 1.0, 1e-10);
    phases.push_back(std::arg(es.eigenvalues()(i)));
  }
  std::sort(phases.begin(), phases.end());
  for (std::size_t i = 0; i < phases.size(); i += 2) EXPECT_NEAR(phases[i], phases[i + 1], 1e-8);
}

TEST(ExactUnitary, RefusesPastCap) {
  PauliHamiltonian h{15, {}};
  EXPECT_THROW(exact_unitary(h, 1.0), std::length_error);
  EXPECT_THROW(circuit_unitary(Circuit(15)), std::length_error);
}

TEST(CircuitUnitary, BasicCases) {
  EXPECT_EQ(circuit_unitary(Circuit(2)), Mat::Identity(4, 4));
  Circuit h(1);
  h.append(Gate::h(0));
  Mat expected(2, 2);
  expected << 1, 1, 1, -1;
  expected /= std::sqrt(2.0);
  EXPECT_LT((circuit_unitary(h) - expected).norm(), 1e-15);
}

TEST(CircuitUnitary, MatchesReferenceAndStatevector) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t n = 1 + rng() % 4;
    Circuit c(n);
    for (int g = 0; g < 30; ++g) {
      const auto q = static_cast<std::uint32_t>(rng() % n);
      const auto q2 = (q + 1 + static_cast<std::uint32_t>(rng() % std::max(1u, n - 1))) % n;
      switch (rng() % 8) {
        case 0: c.append(Gate::h(q)); break;
        case 1: c.append(Gate::s(q)); break;
        case 2: c.append(Gate::t(q)); break;
        case 3: c.append(Gate::rz(q, 0.37 * g)); break;
        case 4: if (n > 1) c.append(Gate::cnot(q, q2)); break;
        case 5: if (n > 1) c.append(Gate::cz(q, q2)); break;
        case 6: c.append(Gate::x(q)); break;
        default: c.append(Gate::tdg(q)); break;
      }
    }
    const Mat u = circuit_unitary(c);
    EXPECT_LT((u - testing::circuit_matrix(c)).norm(), 1e-12);
    for (Eigen::Index b = 0; b < u.cols(); ++b) {
      Eigen::VectorXcd e = Eigen::VectorXcd::Zero(u.rows());
      e(b) = 1;
      EXPECT_LT((apply_circuit(c, e) - u.col(b)).norm(), 1e-12);
    }
  }
}

TEST(CircuitUnitary, Composition) {
  Circuit a(2), b(2);
  a.append(Gate::h(0));
  a.append(Gate::cnot(0, 1));
  b.append(Gate::rz(1, 0.3));
  b.append(Gate::sdg(0));
  Circuit ab = a;
  ab.append(b);
  EXPECT_LT((circuit_unitary(ab) - circuit_unitary(b) * circuit_unitary(a)).norm(), 1e-12);
}

TEST(CircuitUnitary, DiagonalizesClusterHamiltonian) {
  const auto h = jordan_wigner(sample_instance(10, 1.0, Sparsity::degree(8.7), 4));
  for (const auto& cl : partition_commuting(h)) {
    std::vector<PauliString> ops;
    PauliHamiltonian hc{h.n, {}};
    for (auto i : cl.term_indices) {
      ops.push_back(h.terms[i].op);
      hc.terms.push_back(h.terms[i]);
    }
    const Mat u = circuit_unitary(diagonalize_cluster(ops).clifford);
    Mat d = u * hamiltonian_matrix(hc) * u.adjoint();
    d.diagonal().setZero();
    EXPECT_LT(d.norm(), 1e-10);
  }
}

TEST(NormDiff, Basics) {
  const Mat i2 = Mat::Identity(2, 2);
  EXPECT_EQ(operator_norm_diff(i2, i2), 0.0);
  EXPECT_NEAR(operator_norm_diff(i2, -i2), 2.0, 1e-14);
  EXPECT_THROW(operator_norm_diff(i2, Mat::Identity(4, 4)), std::invalid_argument);
  EXPECT_NEAR(operator_norm_diff(i2, cd(0, 1) * i2, PhaseMode::IgnoreGlobalPhase), 0.0, 1e-14);
}

TEST(NormDiff, AgreesWithSvdAndIsAMetric) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto dim = static_cast<Eigen::Index>(1) << (1 + rng() % 4);
    const Mat a = random_unitary(dim, rng), b = random_unitary(dim, rng), c = random_unitary(dim, rng);
    const double ab = operator_norm_diff(a, b);
    EXPECT_NEAR(ab, testing::opnorm(a - b), 1e-10);
    EXPECT_NEAR(ab, operator_norm_diff(b, a), 1e-12);
    EXPECT_LE(operator_norm_diff(a, c), ab + operator_norm_diff(b, c) + 1e-12);
    EXPECT_NEAR(spectral_norm(a), 1.0, 1e-10);
  }
}

}  // namespace
}  // namespace ssyk
