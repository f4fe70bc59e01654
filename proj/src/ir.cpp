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

#include "qforge/ir.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

#include "qforge/error.hpp"

namespace qforge {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 9> kGateNames{{
    {GateKind::X, "x"},
    {GateKind::Y, "y"},
    {GateKind::Z, "z"},
    {GateKind::H, "h"},
    {GateKind::S, "s"},
    {GateKind::SDG, "sdg"},
    {GateKind::T, "t"},
    {GateKind::TDG, "tdg"},
    {GateKind::SWAP, "swap"},
}};

bool touches_as_target(const Gate& g, const QubitRef& q) {
  return std::find(g.targets.begin(), g.targets.end(), q) != g.targets.end();
}

// Adds one control to a control list, deduplicating same-polarity repeats.
void add_control(std::vector<Control>& controls, const Control& ctrl) {
  for (const Control& existing : controls) {
    if (existing.qubit != ctrl.qubit) continue;
    if (existing.polarity == ctrl.polarity) return;
    throw Error(ErrorCode::DuplicateControlConflict,
                "qubit " + to_string(ctrl.qubit) + " used as both positive and negative control");
  }
  controls.push_back(ctrl);
}

}  // namespace

std::string to_string(const QubitRef& ref) {
  if (ref.is_named()) {
    return std::string(ref.label()) + "[" + std::to_string(ref.offset()) + "]";
  }
  return "#" + std::to_string(ref.index());
}

std::string_view gate_name(GateKind kind) {
  for (const auto& [k, name] : kGateNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<GateKind> gate_from_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto& [k, n] : kGateNames) {
    if (n == lower) return k;
  }
  return std::nullopt;
}

std::size_t target_arity(GateKind kind) { return kind == GateKind::SWAP ? 2 : 1; }

std::string to_string(const Gate& gate) {
  std::string out(gate_name(gate.kind));
  for (const QubitRef& t : gate.targets) out += " " + to_string(t);
  for (const Control& c : gate.controls) {
    out += c.polarity == Polarity::Negative ? " !" : " ";
    out += to_string(c.qubit);
  }
  return out;
}

Gate make_gate(GateKind kind, QubitRef target, std::vector<Control> controls) {
  return Gate{kind, {std::move(target)}, std::move(controls)};
}

Gate make_swap(QubitRef a, QubitRef b, std::vector<Control> controls) {
  return Gate{GateKind::SWAP, {std::move(a), std::move(b)}, std::move(controls)};
}

Circuit::Circuit(std::vector<Register> registers, std::vector<Gate> gates)
    : gates_(std::move(gates)) {
  for (Register& r : registers) declare(std::move(r.label), r.size);
}

std::size_t Circuit::register_qubits() const noexcept {
  std::size_t total = 0;
  for (const Register& r : registers_) total += r.size;
  return total;
}

const Register* Circuit::find_register(std::string_view label) const {
  for (const Register& r : registers_) {
    if (r.label == label) return &r;
  }
  return nullptr;
}

std::optional<std::size_t> Circuit::register_base(std::string_view label) const {
  std::size_t base = 0;
  for (const Register& r : registers_) {
    if (r.label == label) return base;
    base += r.size;
  }
  return std::nullopt;
}

std::optional<std::size_t> Circuit::try_index_of(const QubitRef& ref) const {
  if (!ref.is_named()) {
    if (ref.index() < num_qubits_) return ref.index();
    return std::nullopt;
  }
  std::size_t base = 0;
  for (const Register& r : registers_) {
    if (r.label == ref.label()) {
      if (ref.offset() < r.size) return base + ref.offset();
      return std::nullopt;
    }
    base += r.size;
  }
  return std::nullopt;
}

std::size_t Circuit::index_of(const QubitRef& ref) const {
  if (auto idx = try_index_of(ref)) return *idx;
  throw Error(ErrorCode::UnresolvableQubit, "cannot resolve qubit " + to_string(ref));
}

Circuit& Circuit::declare(std::string label, std::size_t size) {
  if (const Register* existing = find_register(label)) {
    if (existing->size != size) {
      throw Error(ErrorCode::ConflictingRegister,
                  "register '" + label + "' declared with sizes " +
                      std::to_string(existing->size) + " and " + std::to_string(size));
    }
    return *this;
  }
  registers_.push_back(Register{std::move(label), size});
  num_qubits_ += size;
  return *this;
}

Circuit& Circuit::set_num_qubits(std::size_t n) {
  num_qubits_ = std::max(n, register_qubits());
  return *this;
}

Circuit& Circuit::append(Gate gate) {
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(std::span<const Gate> gates) {
  gates_.insert(gates_.end(), gates.begin(), gates.end());
  return *this;
}

Circuit chain(const Circuit& c1, const Circuit& c2) {
  Circuit out = c1;
  for (const Register& r : c2.registers()) out.declare(r.label, r.size);
  const std::size_t anon1 = c1.num_qubits() - c1.register_qubits();
  const std::size_t anon2 = c2.num_qubits() - c2.register_qubits();
  out.set_num_qubits(out.register_qubits() + std::max(anon1, anon2));
  out.append(std::span<const Gate>(c2.gates()));
  return out;
}

Circuit operator+(const Circuit& c1, const Circuit& c2) { return chain(c1, c2); }

Circuit with_controls(const Circuit& c, std::span<const Control> ctrls) {
  for (const Gate& g : c.gates()) {
    for (const Control& ctrl : ctrls) {
      if (touches_as_target(g, ctrl.qubit)) {
        throw Error(ErrorCode::ControlTargetsOverlap,
                    "control " + to_string(ctrl.qubit) + " is a target of '" + to_string(g) + "'");
      }
    }
  }
  std::vector<Gate> gates;
  gates.reserve(c.size());
  for (const Gate& g : c.gates()) {
    Gate out = g;
    for (const Control& ctrl : ctrls) add_control(out.controls, ctrl);
    gates.push_back(std::move(out));
  }
  Circuit rebuilt(c.registers(), std::move(gates));
  rebuilt.set_num_qubits(c.num_qubits());
  return rebuilt;
}

Circuit repeat(const Circuit& c, std::size_t k) {
  Circuit out(c.registers(), {});
  out.set_num_qubits(c.num_qubits());
  for (std::size_t i = 0; i < k; ++i) out.append(std::span<const Gate>(c.gates()));
  return out;
}

Circuit ladder(std::size_t step, std::size_t width, const WindowBuilder& builder,
               std::span<const QubitRef> qubits, bool reversed) {
  if (step == 0 || width == 0 || qubits.size() < width ||
      (qubits.size() - width) % step != 0) {
    throw Error(ErrorCode::BadLadderGeometry,
                "ladder of width " + std::to_string(width) + " and step " +
                    std::to_string(step) + " does not tile " +
                    std::to_string(qubits.size()) + " qubits");
  }
  std::vector<std::size_t> starts;
  for (std::size_t s = 0; s + width <= qubits.size(); s += step) starts.push_back(s);
  if (reversed) std::reverse(starts.begin(), starts.end());

  Circuit out;
  for (std::size_t s : starts) out = chain(out, builder(qubits.subspan(s, width)));
  return out;
}

std::vector<QubitRef> interleave(std::span<const QubitRef> r1, std::span<const QubitRef> r2) {
  if (r1.size() != r2.size()) {
    throw Error(ErrorCode::LengthMismatch, "Input qubit register lengths must be identical.");
  }
  std::vector<QubitRef> out;
  out.reserve(r1.size() * 2);
  for (std::size_t i = 0; i < r1.size(); ++i) {
    out.push_back(r1[i]);
    out.push_back(r2[i]);
  }
  return out;
}

std::vector<QubitRef> qubits_of(const Register& reg) {
  std::vector<QubitRef> out;
  out.reserve(reg.size);
  for (std::size_t i = 0; i < reg.size; ++i) out.push_back(QubitRef::named(reg.label, i));
  return out;
}

}  // namespace qforge
