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
#include "qforge/ir.hpp"
#include "qforge/library.hpp"
#include "qforge/statevector.hpp"
#include "test_util.hpp"

using namespace qforge;

namespace {

QubitRef q(std::size_t i) { return QubitRef::named("q", i); }

Circuit over_q(std::size_t n, std::vector<Gate> gates) { return Circuit({Register{"q", n}}, std::move(gates)); }

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::Io;
}

}  // namespace

TEST(Chain, ConcatenatesGates) {
  const Circuit c = chain(over_q(2, {x(q(0))}), over_q(2, {make_gate(GateKind::H, q(1))}));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.gates()[0], x(q(0)));
  EXPECT_EQ(c.gates()[1], make_gate(GateKind::H, q(1)));
  EXPECT_EQ(c.num_qubits(), 2u);
}

TEST(Chain, EmptyIsIdentity) {
  const Circuit c = over_q(3, {x(q(0)), cx(q(0), q(2))});
  EXPECT_EQ(chain(c, Circuit()), c);
  EXPECT_EQ(chain(Circuit({Register{"q", 3}}, {}), c), c);
}

TEST(Chain, RegisterUnionAndConflicts) {
  const Circuit a({Register{"a", 2}}, {x(QubitRef::named("a", 1))});
  const Circuit b({Register{"b", 3}}, {x(QubitRef::named("b", 2))});
  const Circuit ab = chain(a, b);
  ASSERT_EQ(ab.registers().size(), 2u);
  EXPECT_EQ(ab.num_qubits(), 5u);
  EXPECT_EQ(code_of([&] { chain(a, Circuit({Register{"a", 3}}, {})); }), ErrorCode::ConflictingRegister);
}

TEST(Chain, IsAssociative) {
  std::mt19937_64 rng(11);
  testutil::RandomCircuitSpec spec;
  spec.min_qubits = spec.max_qubits = 4;
  for (int i = 0; i < 50; ++i) {
    const Circuit a = testutil::random_circuit(rng, spec);
    const Circuit b = testutil::random_circuit(rng, spec);
    const Circuit c = testutil::random_circuit(rng, spec);
    EXPECT_EQ(chain(chain(a, b), c), chain(a, chain(b, c)));
  }
}

TEST(WithControls, AddsControlToEveryGate) {
  const QubitRef c = q(0), t = q(1);
  const Circuit out = with_controls(over_q(2, {x(t)}), std::vector<Control>{pos(c)});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.gates()[0], cx(c, t));
}

TEST(WithControls, NegativeControlOverBlock) {
  const Circuit out = with_controls(over_q(3, {x(q(0)), x(q(1))}), std::vector<Control>{neg(q(2))});
  for (const Gate& g : out.gates()) {
    ASSERT_EQ(g.controls.size(), 1u);
    EXPECT_EQ(g.controls[0], neg(q(2)));
  }
}

TEST(WithControls, Accumulates) {
  const Circuit inner = with_controls(over_q(3, {x(q(0))}), std::vector<Control>{pos(q(1))});
  const Circuit out = with_controls(inner, std::vector<Control>{pos(q(2))});
  EXPECT_EQ(out.gates()[0].controls, (std::vector<Control>{pos(q(1)), pos(q(2))}));
}

TEST(WithControls, DeduplicatesAndRejectsConflicts) {
  const Circuit inner = over_q(3, {cx(q(1), q(0))});
  EXPECT_EQ(with_controls(inner, std::vector<Control>{pos(q(1))}), inner);
  EXPECT_EQ(code_of([&] { with_controls(inner, std::vector<Control>{neg(q(1))}); }),
            ErrorCode::DuplicateControlConflict);
  EXPECT_EQ(code_of([&] { with_controls(inner, std::vector<Control>{pos(q(0))}); }), ErrorCode::ControlTargetsOverlap);
}

TEST(WithControls, DistributesOverChain) {
  std::mt19937_64 rng(5);
  testutil::RandomCircuitSpec spec;
  // Qubit 5 is never touched by the random parts, so it can be a control.
  spec.min_qubits = spec.max_qubits = 5;
  spec.max_controls = 2;
  for (int i = 0; i < 50; ++i) {
    Circuit a = testutil::random_circuit(rng, spec).set_num_qubits(6);
    Circuit b = testutil::random_circuit(rng, spec).set_num_qubits(6);
    const std::vector<Control> cs{neg(QubitRef::at(5))};
    EXPECT_EQ(with_controls(chain(a, b), cs), chain(with_controls(a, cs), with_controls(b, cs)));
  }
}

TEST(Repeat, RepeatsInOrder) {
  const Circuit c = over_q(1, {x(q(0))});
  EXPECT_EQ(repeat(c, 2).gates(), (std::vector<Gate>{x(q(0)), x(q(0))}));
  const Circuit none = repeat(c, 0);
  EXPECT_TRUE(none.empty());
  EXPECT_EQ(none.registers(), c.registers());
}

TEST(Repeat, XTwiceIsIdentity) {
  const StateVector s = run(repeat(over_q(1, {x(q(0))}), 2), 0);
  EXPECT_EQ(s[0], Amplitude(1.0));
  EXPECT_EQ(s[1], Amplitude(0.0));
}

TEST(Interleave, Orders) {
  const std::vector<QubitRef> b{QubitRef::named("b", 0), QubitRef::named("b", 1)};
  const std::vector<QubitRef> a{QubitRef::named("a", 0), QubitRef::named("a", 1)};
  EXPECT_EQ(interleave(b, a), (std::vector<QubitRef>{b[0], a[0], b[1], a[1]}));
  EXPECT_TRUE(interleave({}, {}).empty());
}

TEST(Interleave, LengthMismatch) {
  const std::vector<QubitRef> b{QubitRef::named("b", 0)};
  const std::vector<QubitRef> a{QubitRef::named("a", 0), QubitRef::named("a", 1)};
  try {
    interleave(b, a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
    EXPECT_STREQ(e.what(), "Input qubit register lengths must be identical.");
  }
}

namespace {

// Records each window as a single X on its first qubit, controlled by the rest.
Circuit tag_window(std::span<const QubitRef> w) {
  std::vector<Control> controls;
  for (std::size_t i = 1; i < w.size(); ++i) controls.push_back(pos(w[i]));
  return Circuit::of({make_gate(GateKind::X, w[0], controls)});
}

std::vector<QubitRef> adder_register() {
  std::vector<QubitRef> out{QubitRef::named("c", 0)};
  for (std::size_t i = 0; i < 4; ++i) {
    out.push_back(QubitRef::named("b", i));
    out.push_back(QubitRef::named("a", i));
  }
  return out;
}

}  // namespace

TEST(Ladder, WindowsOfCuccaroChain) {
  const auto qs = adder_register();
  const Circuit out = ladder(2, 3, tag_window, qs);
  ASSERT_EQ(out.size(), 4u);
  const std::vector<std::array<QubitRef, 3>> expected{{qs[0], qs[1], qs[2]},
                                                       {qs[2], qs[3], qs[4]},
                                                       {qs[4], qs[5], qs[6]},
                                                       {qs[6], qs[7], qs[8]}};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(out.gates()[i].target(), expected[i][0]);
    EXPECT_EQ(out.gates()[i].controls[0].qubit, expected[i][1]);
    EXPECT_EQ(out.gates()[i].controls[1].qubit, expected[i][2]);
  }
}

TEST(Ladder, SingleWindow) {
  const auto qs = adder_register();
  EXPECT_EQ(ladder(1, qs.size(), tag_window, qs), tag_window(qs));
}

TEST(Ladder, ReversedKeepsWindowInternalOrder) {
  const auto qs = adder_register();
  auto maj = [](std::span<const QubitRef> w) { return library::maj(w[0], w[1], w[2]); };
  const Circuit fwd = ladder(2, 3, maj, qs);
  const Circuit rev = ladder(2, 3, maj, qs, true);
  ASSERT_EQ(fwd.size(), rev.size());
  const std::size_t windows = fwd.size() / 3;
  for (std::size_t w = 0; w < windows; ++w) {
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_EQ(rev.gates()[w * 3 + k], fwd.gates()[(windows - 1 - w) * 3 + k]);
    }
  }
}

TEST(Ladder, BadGeometry) {
  const auto qs = adder_register();
  EXPECT_EQ(code_of([&] { ladder(2, 4, tag_window, qs); }), ErrorCode::BadLadderGeometry);
  EXPECT_EQ(code_of([&] { ladder(1, 10, tag_window, qs); }), ErrorCode::BadLadderGeometry);
  EXPECT_EQ(code_of([&] { ladder(0, 3, tag_window, qs); }), ErrorCode::BadLadderGeometry);
}

TEST(QubitRef, ResolvesThroughRegisters) {
  const Circuit c({Register{"a", 2}, Register{"b", 1}}, {});
  EXPECT_EQ(c.index_of(QubitRef::named("a", 1)), 1u);
  EXPECT_EQ(c.index_of(QubitRef::named("b", 0)), 2u);
  EXPECT_FALSE(c.try_index_of(QubitRef::named("b", 1)));
  EXPECT_FALSE(c.try_index_of(QubitRef::named("z", 0)));
  EXPECT_EQ(c.index_of(QubitRef::at(2)), 2u);
  EXPECT_FALSE(c.try_index_of(QubitRef::at(3)));
}
