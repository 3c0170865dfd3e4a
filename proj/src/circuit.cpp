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

#include "ssyk/circuit.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace ssyk {

void Circuit::append(const Gate& g) {
  if (g.q0 >= n_ || (g.is_two_qubit() && g.q1 >= n_)) {
    throw std::out_of_range("gate operand out of range for " + std::to_string(n_) +
                            "-qubit circuit");
  }
  if (g.is_two_qubit() && g.q0 == g.q1) {
    throw std::invalid_argument("two-qubit gate needs distinct operands");
  }
  if (g.kind == GateKind::Rz && !std::isfinite(g.angle)) {
    throw std::invalid_argument("non-finite Rz angle");
  }
  Gate stored = g;
  if (!g.is_two_qubit()) stored.q1 = 0;
  if (g.kind != GateKind::Rz) stored.angle = 0.0;
  gates_.push_back(stored);
}

void Circuit::append(const Circuit& other) {
  if (other.n_ != n_) throw std::invalid_argument("cannot append circuits of different width");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

Circuit Circuit::inverse() const {
  Circuit inv(n_);
  inv.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) inv.gates_.push_back(ssyk::inverse(*it));
  return inv;
}

std::int64_t ResourceReport::cnot_count() const {
  return count(GateKind::CNOT) + count(GateKind::CZ);
}

std::int64_t ResourceReport::t_count() const {
  return count(GateKind::T) + count(GateKind::Tdg) + charged_t;
}

std::int64_t ResourceReport::clifford_plus_t_count() const {
  return count(GateKind::H) + cnot_count() + t_count() + rewrite_cliffords + charged_clifford;
}

ResourceReport& ResourceReport::operator+=(const ResourceReport& other) {
  for (std::size_t i = 0; i < kNumGateKinds; ++i) by_kind[i] += other.by_kind[i];
  rewrite_cliffords += other.rewrite_cliffords;
  charged_rotations += other.charged_rotations;
  charged_t += other.charged_t;
  charged_clifford += other.charged_clifford;
  return *this;
}

ResourceReport operator+(ResourceReport a, const ResourceReport& b) { return a += b; }

ResourceReport count_gates(const Circuit& c) {
  ResourceReport r;
  for (const auto& g : c.gates()) ++r.by_kind[static_cast<std::size_t>(g.kind)];
  return r;
}

std::int64_t RotationCostModel::t_per_rotation() const {
  return static_cast<std::int64_t>(std::ceil(c1 * std::log2(1.0 / eps_rot) + c0));
}

std::pair<Circuit, ResourceReport> transpile_clifford_t(const Circuit& c,
                                                        const RotationCostModel& model) {
  if (!(model.eps_rot > 0.0 && model.eps_rot < 0.5)) {
    throw std::invalid_argument("eps_rot must lie in (0, 0.5)");
  }
  const std::int64_t t_cost = model.t_per_rotation();
  const std::int64_t cliff_cost = model.clifford_per_rotation();
  Circuit out(c.num_qubits());
  ResourceReport extra;
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::CZ) {
      out.append(Gate::h(g.q1));
      out.append(Gate::cnot(g.q0, g.q1));
      out.append(Gate::h(g.q1));
      continue;
    }
    if (g.kind != GateKind::Rz) {
      out.append(g);
      continue;
    }
    const double eighths = g.angle / (std::numbers::pi / 4);
    const double nearest = std::round(eighths);
    if (std::abs(g.angle - nearest * (std::numbers::pi / 4)) > kCliffordAngleTolerance) {
      out.append(g);
      ++extra.charged_rotations;
      extra.charged_t += t_cost;
      extra.charged_clifford += cliff_cost;
      continue;
    }
    // Rz(m pi/4) = e^{-i m pi/8} T^m.
    const auto q = g.q0;
    auto add_clifford = [&](Gate cg) {
      out.append(cg);
      ++extra.rewrite_cliffords;
    };
    switch (((static_cast<long long>(nearest) % 8) + 8) % 8) {
      case 0: break;
      case 1: out.append(Gate::t(q)); break;
      case 2: add_clifford(Gate::s(q)); break;
      case 3: add_clifford(Gate::s(q)); out.append(Gate::t(q)); break;
      case 4: add_clifford(Gate::z(q)); break;
      case 5: add_clifford(Gate::z(q)); out.append(Gate::t(q)); break;
      case 6: add_clifford(Gate::sdg(q)); break;
      case 7: out.append(Gate::tdg(q)); break;
    }
  }
  ResourceReport report = count_gates(out);
  report.rewrite_cliffords = extra.rewrite_cliffords;
  report.charged_rotations = extra.charged_rotations;
  report.charged_t = extra.charged_t;
  report.charged_clifford = extra.charged_clifford;
  return {std::move(out), report};
}

std::string emit_qasm(const Circuit& c) {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(c.num_qubits()) + "];\n";
  char buf[64];
  for (const auto& g : c.gates()) {
    out += qasm_name(g.kind);
    if (g.kind == GateKind::Rz) {
      std::snprintf(buf, sizeof buf, "%.17g", g.angle);
      std::string lit = buf;
      // A QASM 2.0 real needs a '.' when it has an exponent ("1e+20" is not one).
      const auto e = lit.find('e');
      if (e != std::string::npos && lit.find('.') == std::string::npos) lit.insert(e, ".0");
      out += "(" + lit + ")";
    }
    out += " q[" + std::to_string(g.q0) + "]";
    if (g.is_two_qubit()) out += ",q[" + std::to_string(g.q1) + "]";
    out += ";\n";
  }
  return out;
}

namespace {

struct ParseError : std::invalid_argument {
  ParseError(std::size_t line, const std::string& what)
      : std::invalid_argument("QASM line " + std::to_string(line) + ": " + what) {}
};

// Recursive descent over + - * / ( ) pi and decimal literals.
class AngleExpr {
 public:
  AngleExpr(std::string_view s, std::size_t line) : s_(s), line_(line) {}

  double parse() {
    double v = sum();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters in angle");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char ch) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  double sum() {
    double v = product();
    for (;;) {
      if (eat('+')) v += product();
      else if (eat('-')) v -= product();
      else return v;
    }
  }
  double product() {
    double v = unary();
    for (;;) {
      if (eat('*')) v *= unary();
      else if (eat('/')) v /= unary();
      else return v;
    }
  }
  double unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return atom();
  }
  double atom() {
    skip_ws();
    if (eat('(')) {
      double v = sum();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (s_.substr(pos_).starts_with("pi")) {
      pos_ += 2;
      return std::numbers::pi;
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc{}) fail("bad number in angle");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<GateKind> kind_from_name(std::string_view name) {
  for (std::size_t k = 0; k < kNumGateKinds; ++k) {
    auto kind = static_cast<GateKind>(k);
    if (qasm_name(kind) == name) return kind;
  }
  return std::nullopt;
}

std::uint32_t parse_operand(std::string_view tok, std::string_view reg, std::size_t line) {
  tok = trim(tok);
  if (!tok.starts_with(reg) || tok.size() < reg.size() + 3 || tok[reg.size()] != '[' ||
      tok.back() != ']') {
    throw ParseError(line, "expected operand " + std::string(reg) + "[i], got '" +
                               std::string(tok) + "'");
  }
  auto digits = tok.substr(reg.size() + 1, tok.size() - reg.size() - 2);
  std::uint32_t idx = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ParseError(line, "bad qubit index '" + std::string(digits) + "'");
  }
  return idx;
}

}  // namespace

Circuit parse_qasm(std::string_view text) {
  std::optional<Circuit> circuit;
  std::string reg;
  bool saw_header = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto c = line.find("//"); c != std::string_view::npos) line = line.substr(0, c);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (line.back() != ';') throw ParseError(line_no, "statement must end with ';'");
    line = trim(line.substr(0, line.size() - 1));

    if (line.starts_with("OPENQASM")) {
      if (trim(line.substr(8)) != "2.0") throw ParseError(line_no, "only OpenQASM 2.0 is supported");
      saw_header = true;
      continue;
    }
    if (!saw_header) throw ParseError(line_no, "missing OPENQASM 2.0 header");
    if (line.starts_with("include")) continue;
    if (line.starts_with("qreg")) {
      if (circuit) throw ParseError(line_no, "only one quantum register is supported");
      auto decl = trim(line.substr(4));
      auto lb = decl.find('[');
      if (lb == std::string_view::npos || decl.back() != ']') throw ParseError(line_no, "bad qreg");
      reg = std::string(trim(decl.substr(0, lb)));
      auto size_txt = decl.substr(lb + 1, decl.size() - lb - 2);
      std::uint32_t n = 0;
      auto [ptr, ec] = std::from_chars(size_txt.data(), size_txt.data() + size_txt.size(), n);
      if (ec != std::errc{} || ptr != size_txt.data() + size_txt.size()) {
        throw ParseError(line_no, "bad qreg size");
      }
      circuit.emplace(n);
      continue;
    }
    if (!circuit) throw ParseError(line_no, "gate before qreg declaration");

    std::size_t name_end = 0;
    while (name_end < line.size() &&
           (std::isalnum(static_cast<unsigned char>(line[name_end])) || line[name_end] == '_')) {
      ++name_end;
    }
    auto name = line.substr(0, name_end);
    auto kind = kind_from_name(name);
    if (!kind) throw ParseError(line_no, "unsupported gate '" + std::string(name) + "'");
    auto rest = trim(line.substr(name_end));
    Gate g{*kind};
    if (*kind == GateKind::Rz) {
      if (rest.empty() || rest.front() != '(') throw ParseError(line_no, "rz needs an angle");
      auto close = rest.rfind(')');
      if (close == std::string_view::npos) throw ParseError(line_no, "missing ')'");
      g.angle = AngleExpr(rest.substr(1, close - 1), line_no).parse();
      rest = trim(rest.substr(close + 1));
    }
    auto comma = rest.find(',');
    const bool two = (*kind == GateKind::CNOT || *kind == GateKind::CZ);
    if (two != (comma != std::string_view::npos)) throw ParseError(line_no, "wrong operand count");
    g.q0 = parse_operand(two ? rest.substr(0, comma) : rest, reg, line_no);
    if (two) g.q1 = parse_operand(rest.substr(comma + 1), reg, line_no);
    try {
      circuit->append(g);
    } catch (const std::exception& e) {
      throw ParseError(line_no, e.what());
    }
    if (end == text.size()) break;
  }
  if (!circuit) throw std::invalid_argument("QASM text declares no qreg");
  return std::move(*circuit);
}

}  // namespace ssyk
