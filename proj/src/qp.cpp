/*
 * Copyright 2026 The qforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qforge/qp.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

#include "qforge/error.hpp"

namespace qforge {

namespace {

constexpr GateKind kOpcodeTable[] = {GateKind::X, GateKind::Y,   GateKind::Z, GateKind::H,
                                     GateKind::S, GateKind::SDG, GateKind::T, GateKind::TDG};

// Returns a description of the first broken invariant, or empty.
std::string gate_problem(const QPGate& g, std::size_t n_qubits, std::size_t max_controls) {
  if (!kind_of_opcode(g.opcode)) return "bad opcode " + std::to_string(g.opcode);
  if (g.target < 0 || static_cast<std::size_t>(g.target) >= n_qubits) {
    return "target " + std::to_string(g.target) + " out of range";
  }
  if (g.controls.size() != max_controls) {
    return "expected " + std::to_string(max_controls) + " control slots";
  }
  bool seen_unused = false;
  for (std::size_t i = 0; i < g.controls.size(); ++i) {
    const int c = g.controls[i];
    if (c == -1) {
      seen_unused = true;
      continue;
    }
    if (seen_unused) return "control after unused slot";
    if (c < 0 || static_cast<std::size_t>(c) >= n_qubits) {
      return "control " + std::to_string(c) + " out of range";
    }
    if (c == g.target) return "control " + std::to_string(c) + " equals target";
    for (std::size_t j = 0; j < i; ++j) {
      if (g.controls[j] == c) return "duplicate control " + std::to_string(c);
    }
  }
  return {};
}

class TokenReader {
 public:
  explicit TokenReader(std::string_view text) : text_(text) {}

  std::optional<long long> next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size()) return std::nullopt;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view tok = text_.substr(start, pos_ - start);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error(ErrorCode::NonIntegerToken, "non-integer token '" + std::string(tok) + "'");
    }
    return value;
  }

  long long require(const std::string& what) {
    auto v = next();
    if (!v) throw Error(ErrorCode::Truncated, "truncated input: missing " + what);
    return *v;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::optional<int> opcode_of(GateKind kind) {
  for (int i = 0; i < 8; ++i) {
    if (kOpcodeTable[i] == kind) return i + 1;
  }
  return std::nullopt;
}

std::optional<GateKind> kind_of_opcode(int opcode) {
  if (opcode < 1 || opcode > 8) return std::nullopt;
  return kOpcodeTable[opcode - 1];
}

void validate(const QPProgram& p) {
  if (p.n_qubits == 0) throw Error(ErrorCode::InvariantViolation, "program has no qubits");
  if (p.max_controls < 2) throw Error(ErrorCode::InvariantViolation, "max_controls must be at least 2");
  for (std::size_t i = 0; i < p.gates.size(); ++i) {
    const std::string problem = gate_problem(p.gates[i], p.n_qubits, p.max_controls);
    if (!problem.empty()) {
      throw Error(ErrorCode::InvariantViolation, "gate " + std::to_string(i) + ": " + problem);
    }
  }
}

std::string emit_qp(const QPProgram& p) {
  validate(p);
  std::ostringstream out;
  out << p.n_qubits << ' ' << p.gates.size() << ' ' << p.max_controls << '\n';
  for (const QPGate& g : p.gates) {
    out << g.opcode << ' ' << g.target;
    for (int c : g.controls) out << ' ' << c;
    out << '\n';
  }
  return out.str();
}

QPProgram parse_qp(std::string_view text) {
  TokenReader in(text);
  const long long n_qubits = in.require("qubit count");
  const long long n_gates = in.require("gate count");
  const long long max_controls = in.require("control width");
  if (n_qubits < 1 || n_qubits > std::numeric_limits<int>::max()) {
    throw Error(ErrorCode::BadHeader, "invalid qubit count " + std::to_string(n_qubits));
  }
  if (n_gates < 0) throw Error(ErrorCode::BadHeader, "invalid gate count " + std::to_string(n_gates));
  if (max_controls < 2 || max_controls > 1024) {
    throw Error(ErrorCode::BadHeader, "invalid control width " + std::to_string(max_controls));
  }

  QPProgram p;
  p.n_qubits = static_cast<std::size_t>(n_qubits);
  p.max_controls = static_cast<std::size_t>(max_controls);
  auto as_int = [](long long v) {
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
      throw Error(ErrorCode::BadIndex, "index " + std::to_string(v) + " out of range");
    }
    return static_cast<int>(v);
  };
  for (long long gi = 0; gi < n_gates; ++gi) {
    const std::string where = "gate " + std::to_string(gi);
    QPGate g;
    const long long opcode = in.require(where + " opcode");
    if (opcode < 1 || opcode > 8) throw Error(ErrorCode::BadOpcode, "bad opcode " + std::to_string(opcode));
    g.opcode = static_cast<int>(opcode);
    g.target = as_int(in.require(where + " target"));
    for (long long k = 0; k < max_controls; ++k) g.controls.push_back(as_int(in.require(where + " control")));
    const std::string problem = gate_problem(g, p.n_qubits, p.max_controls);
    if (!problem.empty()) throw Error(ErrorCode::BadIndex, where + ": " + problem);
    p.gates.push_back(std::move(g));
  }
  if (auto extra = in.next()) {
    throw Error(ErrorCode::TrailingTokens, "unexpected token " + std::to_string(*extra) + " after last gate");
  }
  return p;
}

QPProgram to_qp(const Circuit& lowered, std::size_t max_controls) {
  QPProgram p;
  p.n_qubits = lowered.num_qubits();
  p.max_controls = max_controls;
  for (std::size_t i = 0; i < lowered.size(); ++i) {
    const Gate& g = lowered.gates()[i];
    auto fail = [&](const std::string& why) {
      throw Error(ErrorCode::InvariantViolation, "gate " + std::to_string(i) + " (" + to_string(g) + "): " + why);
    };
    const auto opcode = opcode_of(g.kind);
    if (!opcode) fail("gate has no opcode and must be lowered first");
    if (g.controls.size() > max_controls) fail("too many controls");
    QPGate out;
    out.opcode = *opcode;
    if (g.target().is_named()) fail("named qubit reference; resolve names first");
    out.target = static_cast<int>(g.target().index());
    for (const Control& c : g.controls) {
      if (c.polarity != Polarity::Positive) fail("negative control must be lowered first");
      if (c.qubit.is_named()) fail("named qubit reference; resolve names first");
      out.controls.push_back(static_cast<int>(c.qubit.index()));
    }
    out.controls.resize(max_controls, -1);
    p.gates.push_back(std::move(out));
  }
  validate(p);
  return p;
}

Circuit to_circuit(const QPProgram& p) {
  validate(p);
  Circuit c(p.n_qubits);
  for (const QPGate& g : p.gates) {
    std::vector<Control> controls;
    for (int ctl : g.controls) {
      if (ctl >= 0) controls.push_back(pos(QubitRef::at(static_cast<std::size_t>(ctl))));
    }
    c.append(make_gate(*kind_of_opcode(g.opcode), QubitRef::at(static_cast<std::size_t>(g.target)),
                       std::move(controls)));
  }
  return c;
}

}  // namespace qforge
