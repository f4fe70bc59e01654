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

// Reference circuits: Cuccaro MAJ/UNMAJ blocks, the ripple-carry full adder,
// the modulo adder in two qubit layouts, and increment kernels.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qforge/ir.hpp"

namespace qforge::library {

/// CX(z->y), CX(z->x), CCX(x,y->z).
Circuit maj(const QubitRef& x, const QubitRef& y, const QubitRef& z);
/// CCX(x,y->z), CX(z->x), CX(x->y).
Circuit unmaj(const QubitRef& x, const QubitRef& y, const QubitRef& z);

/// Cuccaro adder: in2 += in1 with carry-in c (|0>) and carry-out z. The
/// returned circuit declares no registers.
Circuit full_add(std::span<const QubitRef> in1, std::span<const QubitRef> in2, const QubitRef& c,
                 const QubitRef& z);

/// full_add over registers a, b (width each), c and z, declared in that order.
Circuit full_adder(std::size_t width);

enum class Layout {
  /// One register `q`: q[0] = c, q[2i+1] = b_i, q[2i+2] = a_i.
  Interleaved,
  /// Registers a, b, c declared in that order.
  ARegisterFirst,
};

/// b := (a + b) mod 2^width with a and c restored.
Circuit mod_add(std::size_t width, Layout layout = Layout::ARegisterFirst);

/// Maps an Interleaved-layout qubit index to its ARegisterFirst index.
std::vector<std::size_t> interleaved_to_a_first(std::size_t width);

/// |b> -> |(b + k) mod 2^width> over register b. Built from one ripple
/// increment per set bit of k.
Circuit increment_kernel(std::size_t width, std::uint64_t k);

}  // namespace qforge::library
