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

#include "qforge/logic_sim.hpp"

#include "qforge/error.hpp"

namespace qforge {

BasisState::BasisState(std::size_t n_qubits, std::uint64_t low_bits)
    : n_qubits_(n_qubits), words_((n_qubits + 63) / 64, 0) {
  if (n_qubits < 64 && (low_bits >> n_qubits) != 0) {
    throw Error(ErrorCode::BasisOutOfRange,
                "basis state " + std::to_string(low_bits) + " out of range for " + std::to_string(n_qubits) + " qubits");
  }
  if (!words_.empty()) words_[0] = low_bits;
}

void BasisState::set(std::size_t i, bool v) {
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (v) {
    words_[i / 64] |= mask;
  } else {
    words_[i / 64] &= ~mask;
  }
}

std::uint64_t BasisState::field(std::size_t first, std::size_t width) const {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < width; ++i) v |= std::uint64_t{bit(first + i)} << i;
  return v;
}

void BasisState::set_field(std::size_t first, std::size_t width, std::uint64_t value) {
  for (std::size_t i = 0; i < width; ++i) set(first + i, (value >> i) & 1U);
}

std::string BasisState::to_bitstring() const {
  std::string out;
  out.reserve(n_qubits_);
  for (std::size_t i = n_qubits_; i-- > 0;) out.push_back(bit(i) ? '1' : '0');
  return out;
}

BasisState run_logic(const Circuit& c, const BasisState& input) {
  if (input.num_qubits() != c.num_qubits()) {
    throw Error(ErrorCode::BasisOutOfRange, "input has " + std::to_string(input.num_qubits()) +
                                               " qubits, circuit has " + std::to_string(c.num_qubits()));
  }
  BasisState state = input;
  for (std::size_t gi = 0; gi < c.size(); ++gi) {
    const Gate& g = c.gates()[gi];
    if (g.kind != GateKind::X && g.kind != GateKind::SWAP) {
      throw Error(ErrorCode::NonLogicGate, "gate " + std::to_string(gi) + " (" + std::string(gate_name(g.kind)) +
                                               ") is not an X-family gate; use the state-vector backend");
    }
    bool fires = true;
    for (const Control& ctl : g.controls) {
      const bool b = state.bit(c.index_of(ctl.qubit));
      if (b != (ctl.polarity == Polarity::Positive)) {
        fires = false;
        break;
      }
    }
    if (!fires) continue;
    const std::size_t t0 = c.index_of(g.targets[0]);
    if (g.kind == GateKind::X) {
      state.flip(t0);
    } else {
      const std::size_t t1 = c.index_of(g.targets[1]);
      const bool b0 = state.bit(t0);
      state.set(t0, state.bit(t1));
      state.set(t1, b0);
    }
  }
  return state;
}

std::uint64_t run_logic(const Circuit& c, std::uint64_t input) {
  return run_logic(c, BasisState(c.num_qubits(), input)).to_uint64();
}

}  // namespace qforge
