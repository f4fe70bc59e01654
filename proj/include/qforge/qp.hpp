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

// QP ("quantum problem") files: a whitespace-separated list of decimal
// integers. Header `n_qubits n_gates max_controls`, then one record per gate:
// `opcode target c1 ... cM` with -1 filling unused control slots.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qforge/ir.hpp"

namespace qforge {

/// Opcode assignments: 1=X 2=Y 3=Z 4=H 5=S 6=SDG 7=T 8=TDG. SWAP has none.
std::optional<int> opcode_of(GateKind kind);
std::optional<GateKind> kind_of_opcode(int opcode);

struct QPGate {
  int opcode = 0;
  int target = 0;
  /// Exactly max_controls entries; -1 marks an unused slot.
  std::vector<int> controls;

  friend bool operator==(const QPGate&, const QPGate&) = default;
};

struct QPProgram {
  std::size_t n_qubits = 1;
  std::size_t max_controls = 2;
  std::vector<QPGate> gates;

  friend bool operator==(const QPProgram&, const QPProgram&) = default;
};

/// Throws InvariantViolation naming the first offending gate.
void validate(const QPProgram& p);

std::string emit_qp(const QPProgram& p);
QPProgram parse_qp(std::string_view text);

/// Encodes a lowered circuit: indexed refs, no SWAP, positive controls only,
/// at most max_controls controls per gate.
QPProgram to_qp(const Circuit& lowered, std::size_t max_controls);

/// Decodes a program back into an index-form circuit.
Circuit to_circuit(const QPProgram& p);

}  // namespace qforge
