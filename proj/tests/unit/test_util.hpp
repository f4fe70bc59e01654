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

// Test-only oracles and generators. Nothing here calls into the simulators'
// pair-update kernels, so it can serve as an independent reference.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qforge/ir.hpp"
#include "qforge/statevector.hpp"

namespace qforge::testutil {

inline std::string fixture(const std::string& name) { return std::string(QFORGE_FIXTURE_DIR) + "/" + name; }

using Dense = std::vector<std::vector<std::complex<double>>>;

// Matrix of an index-form gate, built element by element from its
// definition: it acts as U on the target bit when the controls are
// satisfied and as the identity otherwise.
inline Dense dense_gate(const Gate& g, std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  Dense m(dim, std::vector<std::complex<double>>(dim, 0.0));
  auto satisfied = [&](std::size_t b) {
    for (const Control& c : g.controls) {
      const bool bit = (b >> c.qubit.index()) & 1U;
      if (bit != (c.polarity == Polarity::Positive)) return false;
    }
    return true;
  };
  if (g.kind == GateKind::SWAP) {
    const std::size_t p = g.targets[0].index();
    const std::size_t q = g.targets[1].index();
    for (std::size_t col = 0; col < dim; ++col) {
      std::size_t row = col;
      if (satisfied(col) && (((col >> p) ^ (col >> q)) & 1U)) row = col ^ (std::size_t{1} << p) ^ (std::size_t{1} << q);
      m[row][col] = 1.0;
    }
    return m;
  }
  const GateMatrix u = gate_matrix(g.kind);
  const std::size_t t = g.target().index();
  const std::size_t tbit = std::size_t{1} << t;
  for (std::size_t col = 0; col < dim; ++col) {
    for (std::size_t row = 0; row < dim; ++row) {
      if (!satisfied(col)) {
        m[row][col] = row == col ? 1.0 : 0.0;
        continue;
      }
      if ((row & ~tbit) != (col & ~tbit)) continue;
      m[row][col] = u[((row >> t) & 1U) * 2 + ((col >> t) & 1U)];
    }
  }
  return m;
}

inline std::vector<std::complex<double>> dense_run(const Circuit& c, std::uint64_t prep) {
  const std::size_t n = c.num_qubits();
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::complex<double>> state(dim, 0.0);
  state[prep] = 1.0;
  for (const Gate& g : c.gates()) {
    const Dense m = dense_gate(g, n);
    std::vector<std::complex<double>> next(dim, 0.0);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t k = 0; k < dim; ++k) next[r] += m[r][k] * state[k];
    }
    state = std::move(next);
  }
  return state;
}

// Sparse reference simulator straight from the gate definitions. Unlike the
// library simulator it accepts SWAP, so it can judge circuits before lowering.
inline std::vector<std::complex<double>> reference_run(const Circuit& c, std::uint64_t prep) {
  const std::size_t dim = std::size_t{1} << c.num_qubits();
  std::vector<std::complex<double>> state(dim, 0.0);
  state[prep] = 1.0;
  for (const Gate& g : c.gates()) {
    std::vector<std::complex<double>> next(dim, 0.0);
    for (std::size_t col = 0; col < dim; ++col) {
      const std::complex<double> amp = state[col];
      if (amp == 0.0) continue;
      bool fires = true;
      for (const Control& ctl : g.controls) {
        fires = fires && (((col >> c.index_of(ctl.qubit)) & 1U) == 1U) == (ctl.polarity == Polarity::Positive);
      }
      if (!fires) {
        next[col] += amp;
      } else if (g.kind == GateKind::SWAP) {
        const std::size_t p = c.index_of(g.targets[0]);
        const std::size_t q = c.index_of(g.targets[1]);
        std::size_t row = col;
        if (((col >> p) ^ (col >> q)) & 1U) row ^= (std::size_t{1} << p) | (std::size_t{1} << q);
        next[row] += amp;
      } else {
        const std::size_t t = c.index_of(g.target());
        const GateMatrix u = gate_matrix(g.kind);
        const std::size_t in = (col >> t) & 1U;
        const std::size_t base = col & ~(std::size_t{1} << t);
        next[base] += u[0 * 2 + in] * amp;
        next[base | (std::size_t{1} << t)] += u[1 * 2 + in] * amp;
      }
    }
    state = std::move(next);
  }
  return state;
}

struct RandomCircuitSpec {
  std::size_t min_qubits = 1;
  std::size_t max_qubits = 8;
  std::size_t max_gates = 40;
  std::size_t max_controls = 5;
  bool x_family_only = false;
  bool allow_swap = true;
  bool allow_negative = true;
};

// Index-form circuit with valid, pairwise-distinct operands.
inline Circuit random_circuit(std::mt19937_64& rng, const RandomCircuitSpec& spec) {
  std::uniform_int_distribution<std::size_t> nq(spec.min_qubits, spec.max_qubits);
  const std::size_t n = nq(rng);
  Circuit c(n);
  std::uniform_int_distribution<std::size_t> ng(0, spec.max_gates);
  const std::size_t gates = ng(rng);
  const std::vector<GateKind> kinds = spec.x_family_only
                                          ? std::vector<GateKind>{GateKind::X}
                                          : std::vector<GateKind>{GateKind::X, GateKind::Y,   GateKind::Z, GateKind::H,
                                                                  GateKind::S, GateKind::SDG, GateKind::T, GateKind::TDG};
  for (std::size_t i = 0; i < gates; ++i) {
    std::vector<std::size_t> qubits(n);
    for (std::size_t q = 0; q < n; ++q) qubits[q] = q;
    std::shuffle(qubits.begin(), qubits.end(), rng);

    Gate g;
    const bool swap = spec.allow_swap && n >= 2 && std::uniform_int_distribution<int>(0, 5)(rng) == 0;
    g.kind = swap ? GateKind::SWAP : kinds[std::uniform_int_distribution<std::size_t>(0, kinds.size() - 1)(rng)];
    const std::size_t n_targets = swap ? 2 : 1;
    for (std::size_t k = 0; k < n_targets; ++k) g.targets.push_back(QubitRef::at(qubits[k]));
    const std::size_t room = std::min(spec.max_controls, n - n_targets);
    const std::size_t n_controls = std::uniform_int_distribution<std::size_t>(0, room)(rng);
    for (std::size_t k = 0; k < n_controls; ++k) {
      const bool negative = spec.allow_negative && std::uniform_int_distribution<int>(0, 2)(rng) == 0;
      g.controls.push_back(Control{QubitRef::at(qubits[n_targets + k]), negative ? Polarity::Negative : Polarity::Positive});
    }
    c.append(std::move(g));
  }
  return c;
}

// Register-backed named circuit, the shape the text format round-trips.
inline Circuit random_named_circuit(std::mt19937_64& rng, std::size_t max_qubits, std::size_t max_gates) {
  const std::vector<std::string> labels{"a", "b", "q", "anc1", "r_2"};
  std::size_t remaining = std::uniform_int_distribution<std::size_t>(1, max_qubits)(rng);
  std::vector<Register> regs;
  for (std::size_t i = 0; remaining > 0 && i < labels.size(); ++i) {
    const std::size_t size = i + 1 == labels.size() ? remaining : std::uniform_int_distribution<std::size_t>(1, remaining)(rng);
    regs.push_back(Register{labels[i], size});
    remaining -= size;
  }
  std::vector<QubitRef> all;
  for (const Register& r : regs) {
    for (std::size_t i = 0; i < r.size; ++i) all.push_back(QubitRef::named(r.label, i));
  }
  RandomCircuitSpec spec;
  spec.min_qubits = spec.max_qubits = all.size();
  spec.max_gates = max_gates;
  spec.max_controls = 4;
  const Circuit indexed = random_circuit(rng, spec);
  std::vector<Gate> gates;
  for (Gate g : indexed.gates()) {
    for (QubitRef& t : g.targets) t = all[t.index()];
    for (Control& c : g.controls) c.qubit = all[c.qubit.index()];
    gates.push_back(std::move(g));
  }
  return Circuit(regs, std::move(gates));
}

inline std::vector<std::uint64_t> random_permutation(std::mt19937_64& rng, std::size_t m) {
  std::vector<std::uint64_t> p(std::size_t{1} << m);
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace qforge::testutil
