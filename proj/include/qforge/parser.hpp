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

// Text circuit format (.fqt):
//
//   qreg <label> <size>
//   <gate> <target> [<target>] [<control> ...]     # comment
//
// Operands are `label[offset]`, controls may carry a `!` prefix for negative
// polarity. Gate names are case-insensitive: x y z h s sdg t tdg swap.

#include <string>
#include <string_view>

#include "qforge/ir.hpp"

namespace qforge {

/// Parses circuit source. Throws SyntaxError carrying line and column.
Circuit parse_source(std::string_view text);

/// Canonical text form. Index refs are printed through the register table;
/// qubits outside every register are printed under an extra `anc` register.
std::string print_source(const Circuit& circuit);

Circuit read_source_file(const std::string& path);

}  // namespace qforge
