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

#include "qforge/reduction.hpp"

#include <algorithm>
#include <bit>

#include "qforge/error.hpp"
#include "qforge/logic_sim.hpp"

namespace qforge {

namespace {

struct FreeLayout {
  std::vector<std::size_t> free;  // ascending original indices
  std::map<std::size_t, std::size_t> index_map;
};

FreeLayout free_layout(const Circuit& c, const Specialization& s) {
  FreeLayout layout;
  for (std::size_t q = 0; q < c.num_qubits(); ++q) {
    if (s.assignments.count(q) != 0) continue;
    layout.index_map[q] = layout.free.size();
    layout.free.push_back(q);
  }
  return layout;
}

// Empty circuit over the free qubits; registers lose their specialized qubits.
Circuit reduced_shell(const Circuit& c, const Specialization& s, std::size_t n_free) {
  Circuit out;
  std::size_t base = 0;
  for (const Register& r : c.registers()) {
    std::size_t kept = 0;
    for (std::size_t i = 0; i < r.size; ++i) kept += s.assignments.count(base + i) == 0 ? 1 : 0;
    if (kept > 0) out.declare(r.label, kept);
    base += r.size;
  }
  out.set_num_qubits(n_free);
  return out;
}

void validate(const Circuit& c, const Specialization& s) {
  for (const auto& [q, bit] : s.assignments) {
    if (q >= c.num_qubits()) {
      throw Error(ErrorCode::InvalidSpecialization, "qubit " + std::to_string(q) + " is not in the circuit");
    }
  }
}

}  // namespace

std::string_view to_string(ReductionMethod m) {
  return m == ReductionMethod::Syntactic ? "syntactic" : "semantic";
}

Specialization make_specialization(const Circuit& c, std::span<const std::size_t> qubits,
                                   const std::vector<bool>& bits) {
  if (qubits.size() != bits.size()) {
    throw Error(ErrorCode::InvalidSpecialization, "value has " + std::to_string(bits.size()) + " bits for " +
                                                      std::to_string(qubits.size()) + " qubits");
  }
  Specialization s;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (!s.assignments.emplace(qubits[i], bits[i]).second) {
      throw Error(ErrorCode::InvalidSpecialization, "qubit " + std::to_string(qubits[i]) + " specialized twice");
    }
  }
  validate(c, s);
  return s;
}

std::set<std::size_t> find_control_only_qubits(const Circuit& c) {
  std::set<std::size_t> result;
  for (std::size_t q = 0; q < c.num_qubits(); ++q) result.insert(q);
  for (const Gate& g : c.gates()) {
    for (const QubitRef& t : g.targets) result.erase(c.index_of(t));
  }
  return result;
}

std::variant<ReducedKernel, NotReducible> specialize_syntactic(const Circuit& c, const Specialization& s) {
  validate(c, s);
  const FreeLayout layout = free_layout(c, s);
  std::map<std::size_t, bool> tracked = s.assignments;

  std::vector<Gate> gates;
  for (std::size_t gi = 0; gi < c.size(); ++gi) {
    const Gate& g = c.gates()[gi];
    bool targets_tracked = false;
    for (const QubitRef& t : g.targets) targets_tracked = targets_tracked || tracked.count(c.index_of(t)) != 0;

    bool fires = true;
    bool all_controls_tracked = true;
    std::vector<Control> untracked;
    for (const Control& ctl : g.controls) {
      const std::size_t q = c.index_of(ctl.qubit);
      auto it = tracked.find(q);
      if (it == tracked.end()) {
        all_controls_tracked = false;
        untracked.push_back(Control{QubitRef::at(layout.index_map.at(q)), ctl.polarity});
      } else if (it->second != (ctl.polarity == Polarity::Positive)) {
        fires = false;
      }
    }

    if (targets_tracked) {
      if (g.kind != GateKind::X) {
        return NotReducible{gi, std::string(gate_name(g.kind)) + " acts on a specialized qubit"};
      }
      if (!all_controls_tracked) {
        return NotReducible{gi, "specialized qubit " + to_string(g.target()) +
                                    " is targeted under an unspecialized control"};
      }
      if (fires) tracked[c.index_of(g.target())] ^= true;
      continue;
    }
    if (!fires) continue;

    Gate out = g;
    for (QubitRef& t : out.targets) t = QubitRef::at(layout.index_map.at(c.index_of(t)));
    out.controls = std::move(untracked);
    gates.push_back(std::move(out));
  }

  ReducedKernel kernel;
  kernel.circuit = reduced_shell(c, s, layout.free.size());
  kernel.circuit.append(std::span<const Gate>(gates));
  kernel.index_map = layout.index_map;
  for (const auto& [q, bit] : s.assignments) kernel.final_constants[q] = tracked.at(q);
  kernel.method = ReductionMethod::Syntactic;
  return kernel;
}

PermutationExtraction extract_permutation(const Circuit& c, const Specialization& s, std::size_t free_qubit_cap) {
  validate(c, s);
  for (std::size_t gi = 0; gi < c.size(); ++gi) {
    const GateKind k = c.gates()[gi].kind;
    if (k != GateKind::X && k != GateKind::SWAP) {
      throw Error(ErrorCode::UnsupportedForSemanticReduction,
                  "gate " + std::to_string(gi) + " (" + std::string(gate_name(k)) +
                      ") is not a computational-basis gate");
    }
  }
  const FreeLayout layout = free_layout(c, s);
  const std::size_t m = layout.free.size();
  if (m > free_qubit_cap || m >= 63) {
    throw Error(ErrorCode::SemanticCapExceeded, std::to_string(m) + " free qubits exceed the semantic cap of " +
                                                    std::to_string(free_qubit_cap));
  }

  PermutationExtraction result;
  const std::uint64_t dim = std::uint64_t{1} << m;
  result.permutation.resize(dim);
  std::vector<bool> seen(dim, false);
  BasisState input(c.num_qubits());
  for (const auto& [q, bit] : s.assignments) input.set(q, bit);

  for (std::uint64_t v = 0; v < dim; ++v) {
    for (std::size_t i = 0; i < m; ++i) input.set(layout.free[i], (v >> i) & 1U);
    const BasisState out = run_logic(c, input);

    std::uint64_t free_out = 0;
    for (std::size_t i = 0; i < m; ++i) free_out |= std::uint64_t{out.bit(layout.free[i])} << i;
    std::map<std::size_t, bool> constants;
    for (const auto& [q, bit] : s.assignments) constants[q] = out.bit(q);

    if (v == 0) {
      result.final_constants = constants;
    } else if (constants != result.final_constants) {
      throw Error(ErrorCode::EntangledSpecialization,
                  "specialized qubits' outputs depend on the free input (differs at free value " +
                      std::to_string(v) + ")");
    }
    if (seen[free_out]) {
      throw Error(ErrorCode::EntangledSpecialization,
                  "free outputs collide at value " + std::to_string(free_out));
    }
    seen[free_out] = true;
    result.permutation[v] = free_out;
  }

  for (const auto& [q, bit] : s.assignments) {
    if (result.final_constants.at(q) != bit) {
      result.warnings.push_back("specialized qubit " + std::to_string(q) + " ends as " +
                                std::to_string(int{result.final_constants.at(q)}) + ", not its input value " +
                                std::to_string(int{bit}));
    }
  }
  return result;
}

Circuit synthesize_from_permutation(std::span<const std::uint64_t> permutation) {
  const std::uint64_t dim = permutation.size();
  if (dim == 0 || !std::has_single_bit(dim)) {
    throw Error(ErrorCode::NotAPermutation, "permutation size " + std::to_string(dim) + " is not a power of two");
  }
  const std::size_t m = static_cast<std::size_t>(std::countr_zero(dim));
  std::vector<bool> seen(dim, false);
  for (std::uint64_t v : permutation) {
    if (v >= dim || seen[v]) throw Error(ErrorCode::NotAPermutation, "value " + std::to_string(v) + " repeated or out of range");
    seen[v] = true;
  }

  struct Toggle {
    std::size_t target;
    std::uint64_t controls;
  };
  std::vector<std::uint64_t> f(permutation.begin(), permutation.end());
  std::vector<Toggle> toggles;
  // Applies the toggle to every output not yet fixed in place.
  auto apply = [&](const Toggle& t, std::uint64_t from) {
    toggles.push_back(t);
    const std::uint64_t bit = std::uint64_t{1} << t.target;
    for (std::uint64_t w = from; w < dim; ++w) {
      if ((f[w] & t.controls) == t.controls) f[w] ^= bit;
    }
  };

  for (std::uint64_t v = 0; v < dim; ++v) {
    if (f[v] == v) continue;
    // Set missing 1-bits while controlling on the current output's 1-bits,
    // then clear extra 1-bits while controlling on v's 1-bits. Neither
    // fires on any w < v, which already maps to itself.
    for (std::size_t j = 0; j < m; ++j) {
      const std::uint64_t bit = std::uint64_t{1} << j;
      if ((v & bit) != 0 && (f[v] & bit) == 0) apply(Toggle{j, f[v]}, v);
    }
    for (std::size_t j = 0; j < m; ++j) {
      const std::uint64_t bit = std::uint64_t{1} << j;
      if ((v & bit) == 0 && (f[v] & bit) != 0) apply(Toggle{j, v}, v);
    }
  }

  Circuit out(m);
  for (auto it = toggles.rbegin(); it != toggles.rend(); ++it) {
    std::vector<Control> controls;
    for (std::size_t j = m; j-- > 0;) {
      if ((it->controls >> j) & 1U) controls.push_back(pos(QubitRef::at(j)));
    }
    out.append(make_gate(GateKind::X, QubitRef::at(it->target), std::move(controls)));
  }
  return out;
}

std::vector<KernelOutcome> generate_kernels(const Circuit& c, std::span<const std::size_t> qubits,
                                            std::span<const std::vector<bool>> values,
                                            const ReductionOptions& options) {
  std::vector<KernelOutcome> outcomes;
  if (qubits.empty()) {
    KernelOutcome only;
    ReducedKernel kernel;
    kernel.circuit = c;
    for (std::size_t q = 0; q < c.num_qubits(); ++q) kernel.index_map[q] = q;
    only.kernel = std::move(kernel);
    outcomes.push_back(std::move(only));
    return outcomes;
  }

  for (const std::vector<bool>& value : values) {
    KernelOutcome outcome;
    outcome.value = value;
    try {
      const Specialization s = make_specialization(c, qubits, value);
      auto syntactic = specialize_syntactic(c, s);
      if (auto* direct = std::get_if<ReducedKernel>(&syntactic)) {
        outcome.kernel = std::move(*direct);
      } else {
        const NotReducible& nr = std::get<NotReducible>(syntactic);
        outcome.fallback_reason = "gate " + std::to_string(nr.gate_index) + ": " + nr.reason;
        PermutationExtraction extraction = extract_permutation(c, s, options.semantic_cap);
        const FreeLayout layout = free_layout(c, s);
        ReducedKernel kernel;
        kernel.circuit = reduced_shell(c, s, layout.free.size());
        kernel.circuit.append(std::span<const Gate>(synthesize_from_permutation(extraction.permutation).gates()));
        kernel.index_map = layout.index_map;
        kernel.final_constants = std::move(extraction.final_constants);
        kernel.method = ReductionMethod::Semantic;
        outcome.kernel = std::move(kernel);
        outcome.warnings = std::move(extraction.warnings);
      }
    } catch (const Error& e) {
      outcome.error = std::string(to_string(e.code())) + ": " + e.what();
    }
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

std::vector<bool> parse_bits(std::string_view text) {
  std::vector<bool> bits;
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw Error(ErrorCode::InvalidSpecialization, "bad bit character '" + std::string(1, ch) + "'");
    }
    bits.push_back(ch == '1');
  }
  return bits;
}

std::string format_bits(const std::vector<bool>& bits) {
  std::string out;
  for (bool b : bits) out.push_back(b ? '1' : '0');
  return out;
}

}  // namespace qforge
