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

#include <gtest/gtest.h>

#include <random>

#include "qforge/error.hpp"
#include "qforge/library.hpp"
#include "qforge/logic_sim.hpp"
#include "qforge/passes.hpp"
#include "qforge/reduction.hpp"
#include "qforge/statevector.hpp"
#include "test_util.hpp"

using namespace qforge;
namespace lib = qforge::library;

namespace {

QubitRef at(std::size_t i) { return QubitRef::at(i); }

// Interleaved 4-bit modulo adder: c = 0, b_i = 2i+1, a_i = 2i+2.
Circuit mod_adder() { return resolve_names(lib::mod_add(4, lib::Layout::Interleaved)).circuit; }
const std::vector<std::size_t> kAQubits{2, 4, 6, 8, 0};  // a0..a3 then c

std::vector<bool> a_value(std::uint64_t a) {
  std::vector<bool> bits;
  for (std::size_t i = 0; i < 4; ++i) bits.push_back((a >> i) & 1U);
  bits.push_back(false);  // c
  return bits;
}

}  // namespace

TEST(ControlOnly, Examples) {
  const Circuit c = Circuit(3).append(ccx(at(0), at(1), at(2)));
  EXPECT_EQ(find_control_only_qubits(c), (std::set<std::size_t>{0, 1}));
  EXPECT_TRUE(find_control_only_qubits(mod_adder()).empty());
}

TEST(Syntactic, PropagatesControls) {
  const Circuit c = Circuit(3).append(ccx(at(0), at(1), at(2))).append(x(at(0)));
  const std::vector<std::size_t> qubits{0};
  auto r = specialize_syntactic(c, make_specialization(c, qubits, {true}));
  ASSERT_TRUE(std::holds_alternative<ReducedKernel>(r));
  const ReducedKernel& k = std::get<ReducedKernel>(r);
  EXPECT_EQ(k.circuit.num_qubits(), 2u);
  EXPECT_EQ(k.circuit.gates(), (std::vector<Gate>{cx(at(0), at(1))}));
  EXPECT_EQ(k.final_constants.at(0), false);
  EXPECT_EQ(k.index_map.at(1), 0u);
  EXPECT_EQ(k.index_map.at(2), 1u);

  auto off = specialize_syntactic(c, make_specialization(c, qubits, {false}));
  EXPECT_TRUE(std::get<ReducedKernel>(off).circuit.empty());
}

TEST(Syntactic, ModAdderNeedsFallback) {
  const Circuit c = mod_adder();
  auto r = specialize_syntactic(c, make_specialization(c, kAQubits, a_value(1)));
  ASSERT_TRUE(std::holds_alternative<NotReducible>(r));
  // MAJ(c, b0, a0): the Toffoli targets a0 under the free control b0.
  EXPECT_EQ(std::get<NotReducible>(r).gate_index, 2u);
}

TEST(Semantic, ModAdderGivesIncrement) {
  const Circuit c = mod_adder();
  const Specialization s = make_specialization(c, kAQubits, a_value(1));
  const PermutationExtraction p = extract_permutation(c, s);
  ASSERT_EQ(p.permutation.size(), 16u);
  for (std::uint64_t b = 0; b < 16; ++b) EXPECT_EQ(p.permutation[b], (b + 1) % 16);
  EXPECT_TRUE(p.warnings.empty());
  for (const auto& [q, bit] : p.final_constants) EXPECT_EQ(bit, s.assignments.at(q));
}

TEST(Semantic, EntangledSpecialization) {
  const Circuit c = Circuit(2).append(cx(at(1), at(0)));
  const std::vector<std::size_t> qubits{0};
  try {
    extract_permutation(c, make_specialization(c, qubits, {false}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EntangledSpecialization);
  }
}

TEST(Semantic, RejectsNonBasisGatesAndCap) {
  const std::vector<std::size_t> qubits{0};
  const Circuit h = Circuit(2).append(make_gate(GateKind::H, at(1)));
  try {
    extract_permutation(h, make_specialization(h, qubits, {false}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedForSemanticReduction);
  }
  const Circuit wide(6);
  try {
    extract_permutation(wide, make_specialization(wide, qubits, {false}), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SemanticCapExceeded);
  }
}

TEST(Specialization, Validation) {
  const Circuit c(3);
  const std::vector<std::size_t> dup{0, 0};
  const std::vector<std::size_t> bad{5};
  const std::vector<std::size_t> one{0};
  EXPECT_THROW(make_specialization(c, dup, {true, false}), Error);
  EXPECT_THROW(make_specialization(c, bad, {true}), Error);
  EXPECT_THROW(make_specialization(c, one, {true, false}), Error);
  EXPECT_EQ(parse_bits("0110"), (std::vector<bool>{false, true, true, false}));
  EXPECT_EQ(format_bits({true, false}), "10");
  EXPECT_THROW(parse_bits("012"), Error);
}

TEST(Synthesis, SwapPermutation) {
  const std::vector<std::uint64_t> swap01{0, 2, 1, 3};
  const Circuit c = synthesize_from_permutation(swap01);
  for (std::uint64_t v = 0; v < 4; ++v) EXPECT_EQ(run_logic(c, v), swap01[v]);
  const std::vector<std::uint64_t> identity{0, 1, 2, 3, 4, 5, 6, 7};
  EXPECT_TRUE(synthesize_from_permutation(identity).empty());
}

TEST(Synthesis, RandomPermutations) {
  std::mt19937_64 rng(99);
  for (std::size_t m = 1; m <= 6; ++m) {
    for (int i = 0; i < 30; ++i) {
      const auto p = testutil::random_permutation(rng, m);
      const Circuit c = synthesize_from_permutation(p);
      ASSERT_EQ(c.num_qubits(), m);
      for (std::uint64_t v = 0; v < p.size(); ++v) ASSERT_EQ(run_logic(c, v), p[v]);
    }
  }
}

TEST(Synthesis, RejectsNonPermutations) {
  const std::vector<std::uint64_t> repeat{0, 0, 1, 2};
  const std::vector<std::uint64_t> odd{0, 1, 2};
  EXPECT_THROW(synthesize_from_permutation(repeat), Error);
  EXPECT_THROW(synthesize_from_permutation(odd), Error);
}

TEST(GenerateKernels, ModAdderIncrementKernels) {
  const Circuit c = mod_adder();
  const std::vector<std::vector<bool>> values{a_value(1), a_value(2), a_value(3)};
  const auto outcomes = generate_kernels(c, kAQubits, values);
  ASSERT_EQ(outcomes.size(), 3u);
  for (std::uint64_t k = 1; k <= 3; ++k) {
    const KernelOutcome& o = outcomes[k - 1];
    ASSERT_TRUE(o.ok()) << o.error;
    EXPECT_EQ(o.kernel->method, ReductionMethod::Semantic);
    EXPECT_FALSE(o.fallback_reason.empty());
    EXPECT_EQ(o.kernel->circuit.num_qubits(), 4u);
    EXPECT_EQ(StateVector(o.kernel->circuit.num_qubits()).size(), 16u);
    for (std::uint64_t b = 0; b < 16; ++b) EXPECT_EQ(run_logic(o.kernel->circuit, b), (b + k) % 16);
  }
}

TEST(GenerateKernels, KernelKeepsRegisterNames) {
  const auto outcomes = generate_kernels(mod_adder(), kAQubits, std::vector<std::vector<bool>>{a_value(2)});
  ASSERT_TRUE(outcomes[0].ok());
  const Circuit& k = outcomes[0].kernel->circuit;
  ASSERT_EQ(k.registers().size(), 1u);
  EXPECT_EQ(k.registers()[0].label, "q");
  EXPECT_EQ(k.registers()[0].size, 4u);
}

TEST(GenerateKernels, EmptyQubitListReturnsOriginal) {
  const Circuit c = mod_adder();
  const auto outcomes = generate_kernels(c, {}, {});
  ASSERT_EQ(outcomes.size(), 1u);
  EXPECT_EQ(outcomes[0].kernel->circuit, c);
}

TEST(GenerateKernels, ErrorsAreCollectedPerValue) {
  const Circuit c = Circuit(2).append(cx(at(1), at(0)));
  const std::vector<std::size_t> qubits{0};
  const auto outcomes = generate_kernels(c, qubits, std::vector<std::vector<bool>>{{false}, {true}});
  ASSERT_EQ(outcomes.size(), 2u);
  EXPECT_FALSE(outcomes[0].ok());
  EXPECT_NE(outcomes[0].error.find("EntangledSpecialization"), std::string::npos);
}

TEST(Reduction, SoundOnRandomCircuits) {
  // Whenever a kernel exists it must agree with the original circuit on every
  // free input, and the specialized qubits must end at the reported constants.
  std::mt19937_64 rng(2024);
  testutil::RandomCircuitSpec spec;
  spec.min_qubits = 3;
  spec.max_qubits = 8;
  spec.max_gates = 20;
  spec.x_family_only = true;
  int syntactic = 0;
  int semantic = 0;
  for (int i = 0; i < 300; ++i) {
    const Circuit c = testutil::random_circuit(rng, spec);
    const std::size_t n = c.num_qubits();
    std::vector<std::size_t> qubits{rng() % n};
    if (qubits[0] + 1 < n && rng() % 2 == 0) qubits.push_back(qubits[0] + 1);
    std::vector<bool> bits;
    for (std::size_t k = 0; k < qubits.size(); ++k) bits.push_back(rng() % 2 == 1);
    const auto outcome = generate_kernels(c, qubits, std::vector<std::vector<bool>>{bits})[0];
    if (!outcome.ok()) continue;
    const ReducedKernel& k = *outcome.kernel;
    (k.method == ReductionMethod::Syntactic ? syntactic : semantic)++;
    const std::size_t m = k.circuit.num_qubits();
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v) {
      std::uint64_t full = 0;
      for (std::size_t j = 0; j < qubits.size(); ++j) full |= std::uint64_t{bits[j]} << qubits[j];
      for (const auto& [orig, idx] : k.index_map) full |= ((v >> idx) & 1U) << orig;
      const std::uint64_t out = run_logic(c, full);
      const std::uint64_t kout = run_logic(k.circuit, v);
      for (const auto& [orig, idx] : k.index_map) ASSERT_EQ((out >> orig) & 1U, (kout >> idx) & 1U);
      for (const auto& [q, bit] : k.final_constants) ASSERT_EQ(((out >> q) & 1U) == 1U, bit);
    }
  }
  EXPECT_GT(syntactic, 0);
  EXPECT_GT(semantic, 0);
}

TEST(Reduction, SyntacticAndSemanticAgree) {
  std::mt19937_64 rng(77);
  testutil::RandomCircuitSpec spec;
  spec.min_qubits = 3;
  spec.max_qubits = 7;
  spec.x_family_only = true;
  int compared = 0;
  for (int i = 0; i < 1000; ++i) {
    const Circuit c = testutil::random_circuit(rng, spec);
    const std::vector<std::size_t> qubits{rng() % c.num_qubits()};
    const Specialization s = make_specialization(c, qubits, {rng() % 2 == 1});
    auto r = specialize_syntactic(c, s);
    if (!std::holds_alternative<ReducedKernel>(r)) continue;
    const ReducedKernel& k = std::get<ReducedKernel>(r);
    const PermutationExtraction p = extract_permutation(c, s);
    ASSERT_EQ(p.final_constants, k.final_constants);
    for (std::uint64_t v = 0; v < p.permutation.size(); ++v) ASSERT_EQ(run_logic(k.circuit, v), p.permutation[v]);
    ++compared;
  }
  EXPECT_GT(compared, 50);
}
