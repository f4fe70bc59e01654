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

#include "qforge/statevector.hpp"

#include <cmath>
#include <numbers>

#include "qforge/error.hpp"

namespace qforge {

namespace {

constexpr std::size_t kMaxStateQubits = 34;

struct ControlMasks {
  std::uint64_t positive = 0;
  std::uint64_t negative = 0;
};

// Inserts a zero bit at position `bit` of k.
inline std::uint64_t insert_zero(std::uint64_t k, std::size_t bit) {
  const std::uint64_t low = k & ((std::uint64_t{1} << bit) - 1);
  return ((k >> bit) << (bit + 1)) | low;
}

template <typename Resolve>
void apply_resolved(StateVector& state, const Gate& gate, Resolve&& index_of) {
  if (gate.kind == GateKind::SWAP) {
    throw Error(ErrorCode::UnloweredSwap, "state-vector simulator needs SWAP lowered: " + to_string(gate));
  }
  const std::size_t n = state.num_qubits();
  const std::size_t t = index_of(gate.target());
  if (t >= n) throw Error(ErrorCode::UnresolvableQubit, "target out of range: " + to_string(gate));

  ControlMasks masks;
  for (const Control& c : gate.controls) {
    const std::size_t q = index_of(c.qubit);
    if (q >= n) throw Error(ErrorCode::UnresolvableQubit, "control out of range: " + to_string(gate));
    (c.polarity == Polarity::Positive ? masks.positive : masks.negative) |= std::uint64_t{1} << q;
  }

  const std::uint64_t stride = std::uint64_t{1} << t;
  const std::uint64_t half = state.size() / 2;
  std::span<Amplitude> amp = state.amplitudes();
  auto fires = [&](std::uint64_t j) {
    return (j & masks.positive) == masks.positive && (j & masks.negative) == 0;
  };

  if (gate.kind == GateKind::X) {
    for (std::uint64_t k = 0; k < half; ++k) {
      const std::uint64_t j = insert_zero(k, t);
      if (fires(j)) std::swap(amp[j], amp[j + stride]);
    }
    return;
  }

  const GateMatrix u = gate_matrix(gate.kind);
  for (std::uint64_t k = 0; k < half; ++k) {
    const std::uint64_t j = insert_zero(k, t);
    if (!fires(j)) continue;
    const Amplitude a0 = amp[j];
    const Amplitude a1 = amp[j + stride];
    amp[j] = u[0] * a0 + u[1] * a1;
    amp[j + stride] = u[2] * a0 + u[3] * a1;
  }
}

}  // namespace

GateMatrix gate_matrix(GateKind kind) {
  using namespace std::complex_literals;
  const double r = 1.0 / std::numbers::sqrt2;
  const Amplitude t_phase = std::polar(1.0, std::numbers::pi / 4);
  switch (kind) {
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Y: return {0.0, -1i, 1i, 0.0};
    case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
    case GateKind::H: return {r, r, r, -r};
    case GateKind::S: return {1.0, 0.0, 0.0, 1i};
    case GateKind::SDG: return {1.0, 0.0, 0.0, -1i};
    case GateKind::T: return {1.0, 0.0, 0.0, t_phase};
    case GateKind::TDG: return {1.0, 0.0, 0.0, std::conj(t_phase)};
    case GateKind::SWAP: break;
  }
  throw Error(ErrorCode::UnloweredSwap, "SWAP has no 2x2 matrix");
}

StateVector::StateVector(std::size_t n_qubits, std::uint64_t basis) : n_qubits_(n_qubits) {
  if (n_qubits > kMaxStateQubits) {
    throw Error(ErrorCode::InvariantViolation,
                std::to_string(n_qubits) + " qubits exceed the state-vector limit of " +
                    std::to_string(kMaxStateQubits));
  }
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  if (basis >= dim) {
    throw Error(ErrorCode::BasisOutOfRange,
                "basis state " + std::to_string(basis) + " out of range for " + std::to_string(n_qubits) + " qubits");
  }
  amps_.assign(dim, Amplitude{0.0, 0.0});
  amps_[basis] = 1.0;
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const Amplitude& a : amps_) total += std::norm(a);
  return total;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> amplitude_pairs(std::size_t n_qubits, std::size_t target) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  if (target >= n_qubits) return pairs;
  const std::uint64_t half = std::uint64_t{1} << (n_qubits - 1);
  pairs.reserve(half);
  for (std::uint64_t k = 0; k < half; ++k) {
    const std::uint64_t j = insert_zero(k, target);
    pairs.emplace_back(j, j + (std::uint64_t{1} << target));
  }
  return pairs;
}

void apply_gate(StateVector& state, const Gate& gate, const Circuit& c) {
  apply_resolved(state, gate, [&](const QubitRef& q) { return c.index_of(q); });
}

void apply_gate(StateVector& state, const Gate& gate) {
  apply_resolved(state, gate, [](const QubitRef& q) {
    if (q.is_named()) throw Error(ErrorCode::UnresolvableQubit, "named ref without circuit: " + to_string(q));
    return q.index();
  });
}

StateVector run(const Circuit& c, std::uint64_t prep) {
  StateVector state(c.num_qubits(), prep);
  for (const Gate& g : c.gates()) apply_gate(state, g, c);
  return state;
}

std::vector<double> probabilities(const StateVector& s) {
  std::vector<double> out;
  out.reserve(s.size());
  for (const Amplitude& a : s.amplitudes()) out.push_back(std::norm(a));
  return out;
}

}  // namespace qforge
