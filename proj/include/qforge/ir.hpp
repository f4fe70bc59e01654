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

#pragma once

// Circuit intermediate representation and the construction combinators
// (naming, controls, chaining, looping, ladder tiling).

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qforge {

/// Reference to a qubit either by register label and offset, or by absolute
/// index into the circuit's register.
class QubitRef {
 public:
  static QubitRef named(std::string label, std::size_t offset) {
    return QubitRef(std::move(label), offset);
  }
  static QubitRef at(std::size_t index) { return QubitRef(std::nullopt, index); }

  bool is_named() const noexcept { return label_.has_value(); }
  /// Register label; empty for index refs.
  std::string_view label() const noexcept {
    return label_ ? std::string_view(*label_) : std::string_view();
  }
  /// Offset within the register for named refs, absolute index otherwise.
  std::size_t offset() const noexcept { return offset_; }
  std::size_t index() const noexcept { return offset_; }

  friend bool operator==(const QubitRef&, const QubitRef&) = default;
  friend auto operator<=>(const QubitRef&, const QubitRef&) = default;

 private:
  QubitRef(std::optional<std::string> label, std::size_t offset)
      : label_(std::move(label)), offset_(offset) {}

  std::optional<std::string> label_;
  std::size_t offset_;
};

std::string to_string(const QubitRef& ref);

enum class Polarity { Positive, Negative };

struct Control {
  QubitRef qubit;
  Polarity polarity = Polarity::Positive;

  friend bool operator==(const Control&, const Control&) = default;
};

inline Control pos(QubitRef q) { return {std::move(q), Polarity::Positive}; }
inline Control neg(QubitRef q) { return {std::move(q), Polarity::Negative}; }

enum class GateKind { X, Y, Z, H, S, SDG, T, TDG, SWAP };

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_from_name(std::string_view name);
/// Number of target qubits a gate of this kind carries (2 for SWAP).
std::size_t target_arity(GateKind kind);

struct Gate {
  GateKind kind = GateKind::X;
  std::vector<QubitRef> targets;
  std::vector<Control> controls;

  const QubitRef& target() const { return targets.front(); }
  /// X with any number of controls; the vocabulary of the logic simulator.
  bool is_x_family() const noexcept { return kind == GateKind::X; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

std::string to_string(const Gate& gate);

Gate make_gate(GateKind kind, QubitRef target, std::vector<Control> controls = {});
Gate make_swap(QubitRef a, QubitRef b, std::vector<Control> controls = {});
inline Gate x(QubitRef t) { return make_gate(GateKind::X, std::move(t)); }
inline Gate cx(QubitRef c, QubitRef t) {
  return make_gate(GateKind::X, std::move(t), {pos(std::move(c))});
}
inline Gate ccx(QubitRef c1, QubitRef c2, QubitRef t) {
  return make_gate(GateKind::X, std::move(t), {pos(std::move(c1)), pos(std::move(c2))});
}

struct Register {
  std::string label;
  std::size_t size = 0;

  friend bool operator==(const Register&, const Register&) = default;
};

/// Ordered gate list over named registers plus optional anonymous qubits.
/// Anonymous qubits take the indices after all register qubits.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t anonymous_qubits) : num_qubits_(anonymous_qubits) {}
  Circuit(std::vector<Register> registers, std::vector<Gate> gates);

  static Circuit of(std::vector<Gate> gates) { return Circuit({}, std::move(gates)); }

  const std::vector<Register>& registers() const noexcept { return registers_; }
  std::size_t num_qubits() const noexcept { return num_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  /// Total qubits covered by declared registers.
  std::size_t register_qubits() const noexcept;
  const Register* find_register(std::string_view label) const;
  /// First absolute index of a register.
  std::optional<std::size_t> register_base(std::string_view label) const;

  /// Absolute index of a qubit reference; throws UnresolvableQubit.
  std::size_t index_of(const QubitRef& ref) const;
  std::optional<std::size_t> try_index_of(const QubitRef& ref) const;

  Circuit& declare(std::string label, std::size_t size);
  /// Grows the qubit count; new qubits are anonymous.
  Circuit& set_num_qubits(std::size_t n);
  Circuit& append(Gate gate);
  Circuit& append(std::span<const Gate> gates);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::vector<Register> registers_;
  std::size_t num_qubits_ = 0;
  std::vector<Gate> gates_;
};

/// Gates of c1 followed by gates of c2 over the union of both registers.
Circuit chain(const Circuit& c1, const Circuit& c2);
Circuit operator+(const Circuit& c1, const Circuit& c2);

/// Adds every control in ctrls to every gate of c.
Circuit with_controls(const Circuit& c, std::span<const Control> ctrls);

/// c's gate list repeated k times.
Circuit repeat(const Circuit& c, std::size_t k);

using WindowBuilder = std::function<Circuit(std::span<const QubitRef>)>;

/// Applies builder to windows of `width` qubits starting every `step`
/// positions and chains the results, in reverse window order when `reversed`.
Circuit ladder(std::size_t step, std::size_t width, const WindowBuilder& builder,
               std::span<const QubitRef> qubits, bool reversed = false);

std::vector<QubitRef> interleave(std::span<const QubitRef> r1,
                                 std::span<const QubitRef> r2);

/// All qubits of a register, offset-ascending.
std::vector<QubitRef> qubits_of(const Register& reg);

}  // namespace qforge
