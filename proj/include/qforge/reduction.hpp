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

// Circuit qubit reduction: fix chosen qubits to classical values and emit one
// smaller kernel per value. Constant propagation is tried first; when a fixed
// qubit is the target of a gate with an unfixed control, the kernel is
// rebuilt from the extracted basis permutation instead.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qforge/ir.hpp"

namespace qforge {

enum class ReductionMethod { Syntactic, Semantic };

std::string_view to_string(ReductionMethod m);

struct Specialization {
  /// Qubit index -> fixed input bit.
  std::map<std::size_t, bool> assignments;
};

/// Builds a specialization from parallel qubit and bit lists; throws
/// InvalidSpecialization on duplicates, bad indices or width mismatch.
Specialization make_specialization(const Circuit& c, std::span<const std::size_t> qubits,
                                   const std::vector<bool>& bits);

struct ReducedKernel {
  /// Circuit over the free qubits, reindexed densely in ascending order.
  Circuit circuit;
  /// Original free-qubit index -> kernel index.
  std::map<std::size_t, std::size_t> index_map;
  /// Specialized qubit -> its value at the end of the original circuit.
  std::map<std::size_t, bool> final_constants;
  ReductionMethod method = ReductionMethod::Syntactic;
};

struct NotReducible {
  std::size_t gate_index = 0;
  std::string reason;
};

/// Qubits never targeted by any gate.
std::set<std::size_t> find_control_only_qubits(const Circuit& c);

std::variant<ReducedKernel, NotReducible> specialize_syntactic(const Circuit& c, const Specialization& s);

struct PermutationExtraction {
  /// Free-qubit input value -> free-qubit output value. Bit i of a value is
  /// the i-th free qubit in ascending index order.
  std::vector<std::uint64_t> permutation;
  std::map<std::size_t, bool> final_constants;
  std::vector<std::string> warnings;
};

/// Logic-simulates every free input. Throws UnsupportedForSemanticReduction,
/// SemanticCapExceeded or EntangledSpecialization.
PermutationExtraction extract_permutation(const Circuit& c, const Specialization& s,
                                          std::size_t free_qubit_cap = 20);

/// Transformation-based synthesis of a permutation of 2^m values into
/// multi-controlled X gates on m index-form qubits. Throws NotAPermutation.
Circuit synthesize_from_permutation(std::span<const std::uint64_t> permutation);

struct ReductionOptions {
  std::size_t semantic_cap = 20;
};

struct KernelOutcome {
  std::vector<bool> value;
  std::optional<ReducedKernel> kernel;
  /// Why the syntactic path was abandoned, when it was.
  std::string fallback_reason;
  std::vector<std::string> warnings;
  /// Set when no kernel could be produced.
  std::string error;

  bool ok() const noexcept { return kernel.has_value(); }
};

/// One outcome per value, in value order. Bit i of a value fixes qubits[i].
std::vector<KernelOutcome> generate_kernels(const Circuit& c, std::span<const std::size_t> qubits,
                                            std::span<const std::vector<bool>> values,
                                            const ReductionOptions& options = {});

/// "0101" -> {false, true, false, true}; throws InvalidSpecialization.
std::vector<bool> parse_bits(std::string_view text);
std::string format_bits(const std::vector<bool>& bits);

}  // namespace qforge
