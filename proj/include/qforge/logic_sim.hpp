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

// Computational-basis simulator for X-family circuits. Tracks one basis
// state, so time is linear in gates times controls and memory is O(n).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qforge/ir.hpp"

namespace qforge {

class BasisState {
 public:
  explicit BasisState(std::size_t n_qubits, std::uint64_t low_bits = 0);

  std::size_t num_qubits() const noexcept { return n_qubits_; }
  bool bit(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool v);
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  /// Value of the lowest 64 qubits.
  std::uint64_t to_uint64() const noexcept { return words_.empty() ? 0 : words_[0]; }
  /// Bits [first, first + width) as an integer, width <= 64.
  std::uint64_t field(std::size_t first, std::size_t width) const;
  void set_field(std::size_t first, std::size_t width, std::uint64_t value);

  /// Most-significant qubit first.
  std::string to_bitstring() const;

  friend bool operator==(const BasisState&, const BasisState&) = default;

 private:
  std::size_t n_qubits_;
  std::vector<std::uint64_t> words_;
};

/// Throws NonLogicGate for anything other than X (any controls) or SWAP.
BasisState run_logic(const Circuit& c, const BasisState& input);
std::uint64_t run_logic(const Circuit& c, std::uint64_t input);

}  // namespace qforge
