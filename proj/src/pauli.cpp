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

#include "ssyk/pauli.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace ssyk {

namespace {

std::size_t num_words(std::size_t n) { return (n + 63) / 64; }

void check_same_size(const PauliString& p, const PauliString& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw std::invalid_argument("Pauli string size mismatch: " +
                                std::to_string(p.num_qubits()) + " vs " +
                                std::to_string(q.num_qubits()));
  }
}

}  // namespace

PauliString::PauliString(std::size_t n)
    : n_(n), xs_(num_words(n), 0), zs_(num_words(n), 0) {
  if (n == 0) throw std::invalid_argument("PauliString needs at least one qubit");
}

PauliString PauliString::from_string(std::string_view text) {
  int phase = 0;
  if (text.starts_with("+i")) {
    phase = 1;
    text.remove_prefix(2);
  } else if (text.starts_with("-i")) {
    phase = 3;
    text.remove_prefix(2);
  } else if (text.starts_with("+")) {
    text.remove_prefix(1);
  } else if (text.starts_with("-")) {
    phase = 2;
    text.remove_prefix(1);
  }
  if (text.empty()) throw std::invalid_argument("empty Pauli label");
  PauliString p(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) p.set(q, text[q]);
  p.set_phase(phase);
  return p;
}

PauliString PauliString::from_words(std::size_t n, std::vector<std::uint64_t> xs,
                                    std::vector<std::uint64_t> zs, int phase) {
  PauliString p(n);
  if (xs.size() != p.xs_.size() || zs.size() != p.zs_.size()) {
    throw std::invalid_argument("PauliString::from_words: word count mismatch");
  }
  if (n % 64 != 0) {
    std::uint64_t high = ~((std::uint64_t{1} << (n % 64)) - 1);
    if ((xs.back() | zs.back()) & high) {
      throw std::invalid_argument("PauliString::from_words: bits set past qubit count");
    }
  }
  p.xs_ = std::move(xs);
  p.zs_ = std::move(zs);
  p.set_phase(phase);
  return p;
}

void PauliString::check_qubit(std::size_t q) const {
  if (q >= n_) {
    throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " +
                            std::to_string(n_) + "-qubit Pauli string");
  }
}

void PauliString::set_x(std::size_t q, bool v) {
  check_qubit(q);
  std::uint64_t m = std::uint64_t{1} << (q & 63);
  if (v) xs_[q >> 6] |= m; else xs_[q >> 6] &= ~m;
}

void PauliString::set_z(std::size_t q, bool v) {
  check_qubit(q);
  std::uint64_t m = std::uint64_t{1} << (q & 63);
  if (v) zs_[q >> 6] |= m; else zs_[q >> 6] &= ~m;
}

void PauliString::set(std::size_t q, char pauli) {
  switch (pauli) {
    case 'I': case '_': set_x(q, false); set_z(q, false); break;
    case 'X': set_x(q, true); set_z(q, false); break;
    case 'Y': set_x(q, true); set_z(q, true); break;
    case 'Z': set_x(q, false); set_z(q, true); break;
    default:
      throw std::invalid_argument(std::string("bad Pauli character '") + pauli + "'");
  }
}

char PauliString::at(std::size_t q) const {
  check_qubit(q);
  static constexpr char kNames[] = {'I', 'X', 'Z', 'Y'};
  return kNames[(x(q) ? 1 : 0) | (z(q) ? 2 : 0)];
}

std::size_t PauliString::weight() const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < xs_.size(); ++i) w += std::popcount(xs_[i] | zs_[i]);
  return w;
}

bool PauliString::is_identity_up_to_phase() const { return weight() == 0; }

bool PauliString::has_x_part() const {
  for (auto w : xs_)
    if (w) return true;
  return false;
}

int PauliString::sign() const {
  if (!is_hermitian()) throw std::logic_error("sign() of non-Hermitian Pauli string " + str());
  return phase_ == 0 ? 1 : -1;
}

std::vector<std::uint32_t> PauliString::support() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    std::uint64_t w = xs_[i] | zs_[i];
    while (w) {
      out.push_back(static_cast<std::uint32_t>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

void PauliString::conjugate(const Gate& g) {
  auto flip = [this](bool b) {
    if (b) phase_ = static_cast<std::uint8_t>((phase_ + 2) & 3);
  };
  check_qubit(g.q0);
  if (g.is_two_qubit()) {
    check_qubit(g.q1);
    if (g.q0 == g.q1) throw std::invalid_argument("two-qubit gate needs distinct operands");
  }
  const std::size_t a = g.q0;
  const std::size_t b = g.q1;
  switch (g.kind) {
    case GateKind::H: {
      bool xa = x(a), za = z(a);
      flip(xa && za);
      set_x(a, za);
      set_z(a, xa);
      break;
    }
    case GateKind::S: {
      bool xa = x(a), za = z(a);
      flip(xa && za);
      set_z(a, za != xa);
      break;
    }
    case GateKind::Sdg: {
      bool xa = x(a), za = z(a);
      flip(xa && !za);
      set_z(a, za != xa);
      break;
    }
    case GateKind::X:
      flip(z(a));
      break;
    case GateKind::Z:
      flip(x(a));
      break;
    case GateKind::CNOT: {
      bool xc = x(a), zc = z(a), xt = x(b), zt = z(b);
      flip(xc && zt && (xt == zc));
      set_x(b, xt != xc);
      set_z(a, zc != zt);
      break;
    }
    case GateKind::CZ:
      conjugate(Gate::h(g.q1));
      conjugate(Gate::cnot(g.q0, g.q1));
      conjugate(Gate::h(g.q1));
      break;
    default:
      throw std::invalid_argument("conjugate: gate '" + std::string(qasm_name(g.kind)) +
                                  "' is not in the supported Clifford set");
  }
}

std::string PauliString::str() const {
  static constexpr const char* kPrefix[] = {"+", "+i", "-", "-i"};
  std::string s = kPrefix[phase_];
  s.reserve(s.size() + n_);
  for (std::size_t q = 0; q < n_; ++q) s.push_back(at(q));
  return s;
}

// With Y stored directly, P = i^{phase + |x&z|} X^x Z^z. Moving Z^z1 past
// X^x2 costs (-1)^{|z1&x2|}, and the product's own |x&z| is divided back out.
PauliString multiply(const PauliString& p, const PauliString& q) {
  check_same_size(p, q);
  auto& px = p.x_words();
  auto& pz = p.z_words();
  auto& qx = q.x_words();
  auto& qz = q.z_words();
  std::int64_t k = p.phase() + q.phase();
  std::vector<std::uint64_t> rx(px.size()), rz(px.size());
  for (std::size_t i = 0; i < px.size(); ++i) {
    rx[i] = px[i] ^ qx[i];
    rz[i] = pz[i] ^ qz[i];
    k += std::popcount(px[i] & pz[i]);
    k += std::popcount(qx[i] & qz[i]);
    k += 2 * std::popcount(pz[i] & qx[i]);
    k -= std::popcount(rx[i] & rz[i]);
  }
  return PauliString::from_words(p.num_qubits(), std::move(rx), std::move(rz),
                                 static_cast<int>(k % 4));
}

bool commutes(const PauliString& p, const PauliString& q) {
  check_same_size(p, q);
  auto& px = p.x_words();
  auto& pz = p.z_words();
  auto& qx = q.x_words();
  auto& qz = q.z_words();
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < px.size(); ++i) acc ^= (px[i] & qz[i]) ^ (pz[i] & qx[i]);
  return (std::popcount(acc) & 1) == 0;
}

PauliString conjugate_by_gate(PauliString p, const Gate& g) {
  p.conjugate(g);
  return p;
}

}  // namespace ssyk
