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

// Lowering pipeline from the eDSL circuit to the QP instruction format:
// verify -> resolve_names -> lower_swaps -> lower_negative_controls
// -> expand_multi_controls -> emit.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qforge/ir.hpp"
#include "qforge/qp.hpp"

namespace qforge {

struct PassConfig {
  /// Architecture limit on controls per gate; at least 2.
  std::size_t max_controls = 2;
  bool allow_ancilla_growth = true;
};

enum class Severity { Warning, Error };

struct Diagnostic {
  Severity severity = Severity::Error;
  /// Offending gate, or nullopt for circuit-level problems.
  std::optional<std::size_t> gate_index;
  std::string message;
};

using Diagnostics = std::vector<Diagnostic>;

std::string to_string(const Diagnostic& d);
bool has_errors(const Diagnostics& diags);

/// Reports out-of-range or undeclared qubits, targets used as controls,
/// duplicate controls, identical SWAP targets and wrong target counts.
Diagnostics verify(const Circuit& c);

struct QubitBinding {
  std::string label;
  std::size_t offset = 0;
  std::size_t index = 0;
};

struct NameResolution {
  Circuit circuit;
  /// Every register qubit, in declaration order.
  std::vector<QubitBinding> table;
};

/// Rewrites every QubitRef to index form; registers are kept for decoding.
NameResolution resolve_names(const Circuit& c);

Circuit lower_swaps(const Circuit& c);
Circuit lower_negative_controls(const Circuit& c);

/// Splits gates with more than cfg.max_controls controls using clean
/// ancillas appended after the existing qubits. The ancilla pool is shared by
/// all gates and sized by the largest excess.
Circuit expand_multi_controls(const Circuit& c, const PassConfig& cfg);

/// Runs every circuit-to-circuit pass; the result is ready for to_qp.
Circuit lower(const Circuit& c, const PassConfig& cfg);

/// Full pipeline. Failures throw Error(CompileError) whose message starts
/// with the failing pass name.
QPProgram compile(const Circuit& c, const PassConfig& cfg = {});

}  // namespace qforge
