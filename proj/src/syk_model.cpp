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

#include "ssyk/syk_model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "ssyk/rng.hpp"

namespace ssyk {

namespace {

// Fourth counter word, fixed so these streams never collide with any other
// use of the same seed.
constexpr std::uint32_t kSykStreamTag = 0x53594B34u;

void check_N(int N) {
  if (N < 4 || N % 2 != 0) {
    throw std::invalid_argument("N must be an even integer >= 4, got " + std::to_string(N));
  }
}

}  // namespace

double p_from_k(double k, int N) {
  if (!(k > 0.0) || !std::isfinite(k)) throw std::invalid_argument("k_target must be > 0");
  check_N(N);
  double n3 = static_cast<double>(N) * N * N;
  return std::min(1.0, 24.0 * k / n3);
}

double Sparsity::retention(int N) const {
  if (k_) return p_from_k(*k_, N);
  if (!(p_ > 0.0 && p_ <= 1.0)) {
    throw std::invalid_argument("retention probability must lie in (0, 1], got " +
                                std::to_string(p_));
  }
  return p_;
}

double coupling_variance(int N, double J, double p) {
  double n3 = static_cast<double>(N) * N * N;
  return 6.0 * J * J / (p * n3);
}

void SykInstance::validate() const {
  check_N(N);
  if (!(J > 0.0) || !std::isfinite(J)) throw std::invalid_argument("J must be > 0");
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in (0, 1]");
  std::set<std::tuple<int, int, int, int>> seen;
  for (const auto& t : terms) {
    if (!(1 <= t.a && t.a < t.b && t.b < t.c && t.c < t.d && t.d <= N)) {
      throw std::invalid_argument("term indices must satisfy 1 <= a<b<c<d <= N");
    }
    if (!std::isfinite(t.coupling)) throw std::invalid_argument("non-finite coupling");
    if (!seen.emplace(t.a, t.b, t.c, t.d).second) {
      throw std::invalid_argument("duplicate quadruple in instance");
    }
  }
}

PauliString majorana_to_pauli(int i, int N) {
  check_N(N);
  if (i < 1 || i > N) {
    throw std::out_of_range("Majorana index " + std::to_string(i) + " outside [1, " +
                            std::to_string(N) + "]");
  }
  PauliString p(static_cast<std::size_t>(N / 2));
  const int r = (i + 1) / 2;
  for (int q = 0; q < r - 1; ++q) p.set(q, 'Z');
  p.set(r - 1, i % 2 == 1 ? 'X' : 'Y');
  return p;
}

SykInstance sample_instance(int N, double J, Sparsity sparsity, std::uint64_t seed) {
  check_N(N);
  if (!(J > 0.0) || !std::isfinite(J)) throw std::invalid_argument("J must be > 0");
  SykInstance inst;
  inst.N = N;
  inst.J = J;
  inst.p = sparsity.retention(N);
  inst.k_target = sparsity.k_target();
  inst.seed = seed;

  const double sigma = std::sqrt(coupling_variance(N, J, inst.p));
  const Philox4x32::Key key{static_cast<std::uint32_t>(seed),
                            static_cast<std::uint32_t>(seed >> 32)};
  std::uint64_t rank = 0;
  for (int a = 1; a <= N; ++a) {
    for (int b = a + 1; b <= N; ++b) {
      for (int c = b + 1; c <= N; ++c) {
        for (int d = c + 1; d <= N; ++d, ++rank) {
          const auto lo = static_cast<std::uint32_t>(rank);
          const auto hi = static_cast<std::uint32_t>(rank >> 32);
          auto w0 = Philox4x32::block({lo, hi, 0, kSykStreamTag}, key);
          if (unit_closed_open(w0[0], w0[1]) > inst.p) continue;
          auto w1 = Philox4x32::block({lo, hi, 1, kSykStreamTag}, key);
          double u1 = unit_open_closed(w0[2], w0[3]);
          double u2 = unit_closed_open(w1[0], w1[1]);
          double g = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
          inst.terms.push_back({a, b, c, d, sigma * g});
        }
      }
    }
  }
  return inst;
}

PauliHamiltonian jordan_wigner(const SykInstance& inst) {
  inst.validate();
  PauliHamiltonian h;
  h.n = static_cast<std::size_t>(inst.N / 2);
  std::vector<PauliString> chi;
  chi.reserve(inst.N);
  for (int i = 1; i <= inst.N; ++i) chi.push_back(majorana_to_pauli(i, inst.N));
  h.terms.reserve(inst.terms.size());
  for (const auto& t : inst.terms) {
    PauliString prod = multiply(multiply(chi[t.a - 1], chi[t.b - 1]),
                                multiply(chi[t.c - 1], chi[t.d - 1]));
    if (!prod.is_hermitian()) {
      throw std::logic_error("JW image of a Majorana quartic is not Hermitian: " + prod.str());
    }
    const int sign = prod.sign();
    prod.set_phase(0);
    h.terms.push_back({sign * t.coupling, std::move(prod)});
  }
  return h;
}

Eigen::MatrixXcd hamiltonian_matrix(const PauliHamiltonian& h, std::size_t max_qubits) {
  if (h.n > max_qubits) {
    throw std::length_error("dense Hamiltonian refused: " + std::to_string(h.n) +
                            " qubits exceeds cap of " + std::to_string(max_qubits));
  }
  const std::size_t n = h.n;
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  static const std::complex<double> kIPow[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& term : h.terms) {
    // Qubit q is bit (n-1-q) of the basis index.
    std::size_t xmask = 0, zmask = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if (term.op.x(q)) xmask |= std::size_t{1} << (n - 1 - q);
      if (term.op.z(q)) zmask |= std::size_t{1} << (n - 1 - q);
    }
    // P|j> = i^{phase + |x&z|} (-1)^{|z&j|} |j ^ x>
    const int base = term.op.phase() + std::popcount(xmask & zmask);
    for (std::size_t j = 0; j < dim; ++j) {
      int k = base + 2 * (std::popcount(zmask & j) & 1);
      m(j ^ xmask, j) += term.coeff * kIPow[k & 3];
    }
  }
  return m;
}

std::string instance_to_json(const SykInstance& inst) {
  nlohmann::ordered_json j;
  j["N"] = inst.N;
  j["J"] = inst.J;
  j["p"] = inst.p;
  j["k_target"] = inst.k_target ? nlohmann::ordered_json(*inst.k_target) : nullptr;
  j["seed"] = inst.seed;
  auto terms = nlohmann::ordered_json::array();
  for (const auto& t : inst.terms) {
    terms.push_back({{"a", t.a}, {"b", t.b}, {"c", t.c}, {"d", t.d}, {"J", t.coupling}});
  }
  j["terms"] = std::move(terms);
  return j.dump(1) + "\n";
}

SykInstance instance_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("instance JSON: ") + e.what());
  }
  SykInstance inst;
  try {
    inst.N = j.at("N").get<int>();
    inst.J = j.at("J").get<double>();
    inst.p = j.at("p").get<double>();
    if (j.contains("k_target") && !j["k_target"].is_null()) {
      inst.k_target = j["k_target"].get<double>();
    }
    inst.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& t : j.at("terms")) {
      inst.terms.push_back({t.at("a").get<int>(), t.at("b").get<int>(), t.at("c").get<int>(),
                            t.at("d").get<int>(), t.at("J").get<double>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("instance JSON: ") + e.what());
  }
  inst.validate();
  return inst;
}

}  // namespace ssyk
