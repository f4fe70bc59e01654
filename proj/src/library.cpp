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

#include "qforge/library.hpp"

#include "qforge/error.hpp"

namespace qforge::library {

namespace {

void require_distinct(const QubitRef& x, const QubitRef& y, const QubitRef& z) {
  if (x == y || y == z || x == z) {
    throw Error(ErrorCode::DuplicateOperand,
                "operands must be distinct: " + to_string(x) + ", " + to_string(y) + ", " + to_string(z));
  }
}

Circuit maj_window(std::span<const QubitRef> w) { return maj(w[0], w[1], w[2]); }
Circuit unmaj_window(std::span<const QubitRef> w) { return unmaj(w[0], w[1], w[2]); }

std::vector<QubitRef> combined_register(std::span<const QubitRef> in1, std::span<const QubitRef> in2,
                                        const QubitRef& c) {
  std::vector<QubitRef> combined{c};
  const std::vector<QubitRef> mixed = interleave(in2, in1);
  combined.insert(combined.end(), mixed.begin(), mixed.end());
  return combined;
}

// Adder without the carry-out CNOT.
Circuit mod_add_gates(std::span<const QubitRef> in1, std::span<const QubitRef> in2, const QubitRef& c) {
  const std::vector<QubitRef> combined = combined_register(in1, in2, c);
  return ladder(2, 3, maj_window, combined) + ladder(2, 3, unmaj_window, combined, true);
}

}  // namespace

Circuit maj(const QubitRef& x, const QubitRef& y, const QubitRef& z) {
  require_distinct(x, y, z);
  return Circuit::of({cx(z, y), cx(z, x), ccx(x, y, z)});
}

Circuit unmaj(const QubitRef& x, const QubitRef& y, const QubitRef& z) {
  require_distinct(x, y, z);
  return Circuit::of({ccx(x, y, z), cx(z, x), cx(x, y)});
}

Circuit full_add(std::span<const QubitRef> in1, std::span<const QubitRef> in2, const QubitRef& c,
                 const QubitRef& z) {
  if (in1.size() != in2.size()) {
    throw Error(ErrorCode::LengthMismatch, "fullAdd: Input qubit register lengths must be identical.");
  }
  if (in1.empty()) throw Error(ErrorCode::LengthMismatch, "fullAdd: registers must not be empty");
  const std::vector<QubitRef> combined = combined_register(in1, in2, c);
  return ladder(2, 3, maj_window, combined) + Circuit::of({cx(in1.back(), z)}) +
         ladder(2, 3, unmaj_window, combined, true);
}

Circuit full_adder(std::size_t width) {
  const Register a{"a", width};
  const Register b{"b", width};
  Circuit regs({a, b, Register{"c", 1}, Register{"z", 1}}, {});
  return regs + full_add(qubits_of(a), qubits_of(b), QubitRef::named("c", 0), QubitRef::named("z", 0));
}

Circuit mod_add(std::size_t width, Layout layout) {
  if (width == 0) throw Error(ErrorCode::LengthMismatch, "mod_add: width must be positive");
  std::vector<QubitRef> a;
  std::vector<QubitRef> b;
  if (layout == Layout::Interleaved) {
    for (std::size_t i = 0; i < width; ++i) {
      b.push_back(QubitRef::named("q", 2 * i + 1));
      a.push_back(QubitRef::named("q", 2 * i + 2));
    }
    return Circuit({Register{"q", 2 * width + 1}}, {}) + mod_add_gates(a, b, QubitRef::named("q", 0));
  }
  const Register ra{"a", width};
  const Register rb{"b", width};
  return Circuit({ra, rb, Register{"c", 1}}, {}) +
         mod_add_gates(qubits_of(ra), qubits_of(rb), QubitRef::named("c", 0));
}

std::vector<std::size_t> interleaved_to_a_first(std::size_t width) {
  std::vector<std::size_t> map(2 * width + 1);
  map[0] = 2 * width;
  for (std::size_t i = 0; i < width; ++i) {
    map[2 * i + 1] = width + i;
    map[2 * i + 2] = i;
  }
  return map;
}

Circuit increment_kernel(std::size_t width, std::uint64_t k) {
  if (width == 0 || width > 63 || k >= (std::uint64_t{1} << width)) {
    throw Error(ErrorCode::KOutOfRange,
                "k = " + std::to_string(k) + " does not fit in " + std::to_string(width) + " bits");
  }
  Circuit out({Register{"b", width}}, {});
  for (std::size_t low = 0; low < width; ++low) {
    if (((k >> low) & 1U) == 0) continue;
    // +2^low: flip bit i when every bit in [low, i) is set, highest first.
    for (std::size_t i = width; i-- > low;) {
      std::vector<Control> controls;
      for (std::size_t j = i; j-- > low;) controls.push_back(pos(QubitRef::named("b", j)));
      out.append(make_gate(GateKind::X, QubitRef::named("b", i), std::move(controls)));
    }
  }
  return out;
}

}  // namespace qforge::library
