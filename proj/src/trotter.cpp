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

#include "ssyk/trotter.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "ssyk/oracle.hpp"

namespace ssyk {

namespace {

void check_order(int order) {
  if (order != 1 && order != 2) throw std::invalid_argument("Trotter order must be 1 or 2");
}

void check_partition_fits(const PauliHamiltonian& h, const std::vector<Cluster>& clusters) {
  std::vector<char> seen(h.terms.size(), 0);
  std::size_t covered = 0;
  for (const auto& c : clusters) {
    for (auto i : c.term_indices) {
      if (i >= h.terms.size() || seen[i]) {
        throw std::invalid_argument("clusters do not partition the Hamiltonian terms");
      }
      seen[i] = 1;
      ++covered;
    }
  }
  if (covered != h.terms.size()) {
    throw std::invalid_argument("clusters do not cover every Hamiltonian term");
  }
}

PauliHamiltonian cluster_hamiltonian(const PauliHamiltonian& h, const Cluster& c) {
  PauliHamiltonian out;
  out.n = h.n;
  for (auto i : c.term_indices) out.terms.push_back(h.terms[i]);
  return out;
}

double t_prefactor(int order, double t, std::int64_t r, const BoundOptions& opts) {
  const double rr = static_cast<double>(r);
  if (order == 1) {
    double f = t * t / (2.0 * rr);
    return opts.coupling_prefactors ? f * opts.J * opts.J : f;
  }
  double f = t * t * t / (rr * rr);
  return opts.coupling_prefactors ? f * opts.J * opts.J * opts.J : f;
}

void check_bound_args(int order, double t, std::int64_t r) {
  check_order(order);
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("t must be >= 0");
  if (r < 1) throw std::invalid_argument("r must be >= 1");
}

}  // namespace

void TrotterPlan::validate() const {
  check_order(order);
  if (r < 1) throw std::invalid_argument("TrotterPlan: r must be >= 1");
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("TrotterPlan: t must be >= 0");
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("TrotterPlan: epsilon must lie in (0, 1]");
  }
}

std::int64_t plan_steps(int order, double jt, double epsilon) {
  check_order(order);
  if (!(jt > 0.0) || !std::isfinite(jt)) throw std::invalid_argument("plan_steps: Jt must be > 0");
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("plan_steps: epsilon must lie in (0, 1]");
  }
  const double raw = order == 2 ? std::pow(jt, 1.5) / std::sqrt(epsilon) : jt * jt / epsilon;
  const double steps = std::ceil(raw * (1.0 - 1e-9));
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(steps));
}

std::vector<DiagonalizedCluster> diagonalize_clusters(const PauliHamiltonian& h,
                                                      const std::vector<Cluster>& clusters) {
  std::vector<DiagonalizedCluster> out;
  out.reserve(clusters.size());
  for (const auto& c : clusters) {
    std::vector<PauliString> ops;
    ops.reserve(c.term_indices.size());
    for (auto i : c.term_indices) ops.push_back(h.terms.at(i).op);
    out.push_back(diagonalize_cluster(ops));
  }
  return out;
}

Circuit build_trotter_circuit(const PauliHamiltonian& h, const TrotterPlan& plan,
                              const TrotterOptions& options) {
  plan.validate();
  check_partition_fits(h, plan.clusters);
  return build_trotter_circuit(h, plan, diagonalize_clusters(h, plan.clusters), options);
}

Circuit build_trotter_circuit(const PauliHamiltonian& h, const TrotterPlan& plan,
                              const std::vector<DiagonalizedCluster>& diagonalized,
                              const TrotterOptions& options) {
  plan.validate();
  check_partition_fits(h, plan.clusters);
  if (diagonalized.size() != plan.clusters.size()) {
    throw std::invalid_argument("diagonalized clusters do not match the plan");
  }
  const std::size_t m = plan.clusters.size();

  // (cluster, number of base time slices) in time order.
  std::vector<std::pair<std::size_t, int>> schedule;
  for (std::int64_t rep = 0; rep < plan.r; ++rep) {
    for (std::size_t j = 0; j < m; ++j) schedule.emplace_back(j, 1);
    if (plan.order == 2) {
      for (std::size_t j = m; j-- > 0;) schedule.emplace_back(j, 1);
    }
  }
  if (options.merge_adjacent) {
    std::vector<std::pair<std::size_t, int>> merged;
    for (const auto& s : schedule) {
      if (!merged.empty() && merged.back().first == s.first) {
        merged.back().second += s.second;
      } else {
        merged.push_back(s);
      }
    }
    schedule = std::move(merged);
  }

  const double slice = plan.order == 1 ? plan.t / static_cast<double>(plan.r)
                                       : plan.t / (2.0 * static_cast<double>(plan.r));
  std::vector<std::vector<double>> coeffs(m);
  for (std::size_t j = 0; j < m; ++j) {
    for (auto i : plan.clusters[j].term_indices) coeffs[j].push_back(h.terms[i].coeff);
  }
  Circuit out(static_cast<std::uint32_t>(h.n));
  for (const auto& [j, slices] : schedule) {
    append_cluster_evolution(out, diagonalized[j], coeffs[j], slice * slices);
  }
  return out;
}

std::string_view to_string(BoundMethod m) {
  return m == BoundMethod::ExactCommutator ? "exact_commutator" : "pauli_analytic";
}

BoundMethod parse_bound_method(std::string_view name) {
  if (name == "exact" || name == "exact_commutator") return BoundMethod::ExactCommutator;
  if (name == "pauli" || name == "pauli_analytic") return BoundMethod::PauliAnalytic;
  throw std::invalid_argument("unknown bound method '" + std::string(name) + "'");
}

ErrorBound bound_error_exact(const PauliHamiltonian& h, const std::vector<Cluster>& clusters,
                             int order, double t, std::int64_t r, const BoundOptions& opts) {
  check_bound_args(order, t, r);
  check_partition_fits(h, clusters);
  if (h.n > kBoundQubitCap) {
    throw std::length_error("exact commutator bound refused: " + std::to_string(h.n) +
                            " qubits exceeds cap of " + std::to_string(kBoundQubitCap));
  }
  const std::size_t m = clusters.size();
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << h.n);
  std::vector<Eigen::MatrixXcd> hp;
  hp.reserve(m);
  for (const auto& c : clusters) hp.push_back(hamiltonian_matrix(cluster_hamiltonian(h, c)));

  ErrorBound b{0.0, BoundMethod::ExactCommutator, order, t, r, std::vector<double>(m, 0.0)};
  const double pre = t_prefactor(order, t, r, opts);
  Eigen::MatrixXcd later = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t p = m; p-- > 0;) {
    const Eigen::MatrixXcd& H = hp[p];
    Eigen::MatrixXcd inner = later * H - H * later;
    double contrib = 0.0;
    if (order == 1) {
      contrib = pre * spectral_norm(inner);
    } else {
      Eigen::MatrixXcd nested_later = later * inner - inner * later;
      Eigen::MatrixXcd own = H * later - later * H;
      Eigen::MatrixXcd nested_own = H * own - own * H;
      contrib = pre / 12.0 * spectral_norm(nested_later) + pre / 24.0 * spectral_norm(nested_own);
    }
    b.components[p] = contrib;
    later += H;
  }
  for (double c : b.components) b.value += c;
  return b;
}

ErrorBound bound_error_pauli(const PauliHamiltonian& h, const std::vector<Cluster>& clusters,
                             int order, double t, std::int64_t r, const BoundOptions& opts) {
  check_bound_args(order, t, r);
  check_partition_fits(h, clusters);
  const std::size_t M = h.terms.size();
  const std::size_t m = clusters.size();
  std::vector<std::size_t> cluster_of(M);
  for (std::size_t p = 0; p < m; ++p) {
    for (auto i : clusters[p].term_indices) cluster_of[i] = p;
  }
  std::vector<double> w(M);
  for (std::size_t i = 0; i < M; ++i) w[i] = std::abs(h.terms[i].coeff);

  const CommutationGraph graph = build_commutation_graph(h);
  const std::size_t words = (M + 63) / 64;
  std::vector<std::uint64_t> bits(M * words, 0);
  for (std::uint32_t i = 0; i < M; ++i) {
    for (auto j : graph.neighbors(i)) bits[i * words + (j >> 6)] |= std::uint64_t{1} << (j & 63);
  }
  auto anti = [&](std::size_t i, std::size_t j) {
    return (bits[i * words + (j >> 6)] >> (j & 63)) & 1u;
  };

  ErrorBound b{0.0, BoundMethod::PauliAnalytic, order, t, r, std::vector<double>(m, 0.0)};
  const double pre = t_prefactor(order, t, r, opts);
  for (std::size_t p = 0; p < m; ++p) {
    double contrib = 0.0;
    if (order == 1) {
      // ||[S_p, H_p]|| <= sum over later b, own c of 2|b||c| [b,c anticommute]
      for (auto c : clusters[p].term_indices) {
        for (auto bb : graph.neighbors(c)) {
          if (cluster_of[bb] > p) contrib += 2.0 * w[bb] * w[c];
        }
      }
      b.components[p] = pre * contrib;
      continue;
    }
    // [S,[S,H_p]]: [P_a,[P_b,P_c]] has norm 4 iff b~c and a anticommutes with
    // P_b P_c, i.e. exactly one of a~b, a~c.
    double nested_later = 0.0;
    for (auto c : clusters[p].term_indices) {
      for (auto bb : graph.neighbors(c)) {
        if (cluster_of[bb] <= p) continue;
        double inner = 0.0;
        for (auto a : graph.neighbors(bb)) {
          if (cluster_of[a] > p && !anti(a, c)) inner += w[a];
        }
        for (auto a : graph.neighbors(c)) {
          if (cluster_of[a] > p && !anti(a, bb)) inner += w[a];
        }
        nested_later += 4.0 * w[c] * w[bb] * inner;
      }
    }
    // [H_p,[H_p,S]]: own terms commute with each other, so [P_c,[P_c',P_b]]
    // is nonzero iff both c and c' anticommute with b.
    double nested_own = 0.0;
    std::vector<double> load(M, 0.0);
    std::vector<std::uint32_t> touched;
    for (auto c : clusters[p].term_indices) {
      for (auto bb : graph.neighbors(c)) {
        if (cluster_of[bb] <= p) continue;
        if (load[bb] == 0.0) touched.push_back(bb);
        load[bb] += w[c];
      }
    }
    for (auto bb : touched) nested_own += 4.0 * w[bb] * load[bb] * load[bb];
    b.components[p] = pre / 12.0 * nested_later + pre / 24.0 * nested_own;
  }
  for (double c : b.components) b.value += c;
  return b;
}

std::string bound_to_json(const ErrorBound& b) {
  nlohmann::ordered_json j;
  j["order"] = b.order;
  j["t"] = b.t;
  j["r"] = b.r;
  j["method"] = std::string(to_string(b.method));
  j["value"] = b.value;
  j["components"] = b.components;
  return j.dump(1) + "\n";
}

double measure_trotter_error(const PauliHamiltonian& h, const TrotterPlan& plan,
                             const TrotterOptions& options) {
  const Circuit c = build_trotter_circuit(h, plan, options);
  return operator_norm_diff(exact_unitary(h, plan.t), circuit_unitary(c));
}

}  // namespace ssyk
