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

#include "ssyk/diagonalizer.hpp"

#include <string>

namespace ssyk {

NonCommutingClusterError::NonCommutingClusterError(std::size_t a, std::size_t b)
    : std::invalid_argument("cluster terms " + std::to_string(a) + " and " + std::to_string(b) +
                            " anticommute"),
      first(a),
      second(b) {}

DiagonalizedCluster diagonalize_cluster(std::span<const PauliString> paulis) {
  if (paulis.empty()) throw std::invalid_argument("cannot diagonalize an empty cluster");
  const std::size_t n = paulis.front().num_qubits();
  for (std::size_t i = 0; i < paulis.size(); ++i) {
    if (paulis[i].num_qubits() != n) throw std::invalid_argument("cluster strings differ in width");
    if (!paulis[i].is_hermitian()) {
      throw std::invalid_argument("cluster term " + std::to_string(i) + " is not Hermitian");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!commutes(paulis[j], paulis[i])) throw NonCommutingClusterError(j, i);
    }
  }

  DiagonalizedCluster out{Circuit(static_cast<std::uint32_t>(n)), {}};
  std::vector<PauliString> work(paulis.begin(), paulis.end());
  // Generator tableau: row operations on it are free and never emitted.
  std::vector<PauliString> gen(paulis.begin(), paulis.end());
  auto apply = [&](const Gate& g) {
    out.clifford.append(g);
    for (auto& p : work) p.conjugate(g);
    for (auto& p : gen) p.conjugate(g);
  };

  // Reduced row echelon form of the X block, pivots at the lowest free column.
  std::vector<std::uint32_t> pivots;
  std::vector<char> is_pivot(n, 0);
  for (std::uint32_t c = 0; c < n && pivots.size() < gen.size(); ++c) {
    const std::size_t row = pivots.size();
    std::size_t r = row;
    while (r < gen.size() && !gen[r].x(c)) ++r;
    if (r == gen.size()) continue;
    std::swap(gen[r], gen[row]);
    for (std::size_t k = 0; k < gen.size(); ++k) {
      if (k != row && gen[k].x(c)) gen[k] = multiply(gen[k], gen[row]);
    }
    pivots.push_back(c);
    is_pivot[c] = 1;
  }
  const std::size_t rank = pivots.size();

  // X block -> identity on the pivot columns.
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (!is_pivot[j] && gen[i].x(j)) apply(Gate::cnot(pivots[i], j));
    }
  }
  // Z block on pivot columns is symmetric for a commuting set.
  for (std::size_t i = 0; i < rank; ++i) {
    if (gen[i].z(pivots[i])) apply(Gate::s(pivots[i]));
  }
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i + 1; j < rank; ++j) {
      if (gen[i].z(pivots[j])) apply(Gate::cz(pivots[i], pivots[j]));
    }
  }
  // Z on other columns survives into the images. CZ(pivot, j) toggles it on
  // every term with X at the pivot; take it while it shortens the ladders by
  // more than the two gates it adds to C and C^dagger.
  for (bool improved = true; improved;) {
    improved = false;
    for (std::size_t i = 0; i < rank; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        long gain = 0;
        for (const auto& p : work) {
          if (p.x(pivots[i])) gain += p.z(j) ? 1 : -1;
        }
        if (gain >= 2) {
          apply(Gate::cz(pivots[i], j));
          improved = true;
        }
      }
    }
  }
  for (std::uint32_t q : pivots) apply(Gate::h(q));

  out.z_strings.reserve(work.size());
  for (const auto& p : work) {
    if (p.has_x_part()) throw std::logic_error("diagonalizer left an X component: " + p.str());
    out.z_strings.push_back({p.sign(), p.support()});
  }
  return out;
}

void append_cluster_evolution(Circuit& out, const DiagonalizedCluster& dc,
                              std::span<const double> coeffs, double dt) {
  if (coeffs.size() != dc.z_strings.size()) {
    throw std::invalid_argument("cluster evolution: " + std::to_string(coeffs.size()) +
                                " coefficients for " + std::to_string(dc.z_strings.size()) +
                                " terms");
  }
  out.append(dc.clifford);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto& s = dc.z_strings[k].support;
    if (s.empty()) continue;
    for (std::size_t a = 0; a + 1 < s.size(); ++a) out.append(Gate::cnot(s[a], s[a + 1]));
    out.append(Gate::rz(s.back(), 2.0 * dc.z_strings[k].sign * coeffs[k] * dt));
    for (std::size_t a = s.size() - 1; a > 0; --a) out.append(Gate::cnot(s[a - 1], s[a]));
  }
  out.append(dc.clifford.inverse());
}

Circuit cluster_evolution_circuit(const DiagonalizedCluster& dc, std::span<const double> coeffs,
                                  double dt) {
  Circuit out(dc.clifford.num_qubits());
  append_cluster_evolution(out, dc, coeffs, dt);
  return out;
}

}  // namespace ssyk
