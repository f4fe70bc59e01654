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

// Full state-vector simulator. Each gate updates the whole amplitude array
// through pairs (j, j + 2^t) where bit t of j is clear. Basis index b holds
// qubit i in bit i (little-endian).

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qforge/ir.hpp"

namespace qforge {

using Amplitude = std::complex<double>;
using GateMatrix = std::array<Amplitude, 4>;  // row-major 2x2

/// Single-qubit unitary for every kind except SWAP.
GateMatrix gate_matrix(GateKind kind);

class StateVector {
 public:
  /// |basis>; throws BasisOutOfRange when basis >= 2^n.
  StateVector(std::size_t n_qubits, std::uint64_t basis = 0);

  std::size_t num_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  std::span<Amplitude> amplitudes() noexcept { return amps_; }
  const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;

 private:
  std::size_t n_qubits_;
  std::vector<Amplitude> amps_;
};

inline StateVector init_state(std::size_t n_qubits, std::uint64_t basis) {
  return StateVector(n_qubits, basis);
}

/// Index pairs (j, j + 2^target) with bit `target` of j clear, ascending in j.
/// They partition [0, 2^n).
std::vector<std::pair<std::uint64_t, std::uint64_t>> amplitude_pairs(std::size_t n_qubits,
                                                                     std::size_t target);

/// Applies a gate in place. Gate refs are resolved through `c`.
/// Negative controls are honoured directly. Throws UnloweredSwap.
void apply_gate(StateVector& state, const Gate& gate, const Circuit& c);

/// Index-form overload for circuits without named refs.
void apply_gate(StateVector& state, const Gate& gate);

/// Simulates c from basis state `prep`.
StateVector run(const Circuit& c, std::uint64_t prep);

std::vector<double> probabilities(const StateVector& s);

}  // namespace qforge
