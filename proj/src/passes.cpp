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

#include "qforge/passes.hpp"

#include <algorithm>
#include <utility>

#include "qforge/error.hpp"

namespace qforge {

namespace {

Circuit rebuild(const Circuit& like, std::vector<Gate> gates, std::size_t n_qubits) {
  Circuit out(like.registers(), std::move(gates));
  out.set_num_qubits(n_qubits);
  return out;
}

Diagnostic error_at(std::size_t gate, std::string message) {
  return Diagnostic{Severity::Error, gate, std::move(message)};
}

void check_config(const PassConfig& cfg) {
  if (cfg.max_controls < 2) {
    throw Error(ErrorCode::CompileError, "config: max_controls must be at least 2");
  }
}

}  // namespace

std::string to_string(const Diagnostic& d) {
  std::string out = d.severity == Severity::Error ? "error" : "warning";
  if (d.gate_index) out += " at gate " + std::to_string(*d.gate_index);
  return out + ": " + d.message;
}

bool has_errors(const Diagnostics& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

Diagnostics verify(const Circuit& c) {
  Diagnostics diags;
  for (std::size_t gi = 0; gi < c.size(); ++gi) {
    const Gate& g = c.gates()[gi];
    if (g.targets.size() != target_arity(g.kind)) {
      diags.push_back(error_at(gi, std::string(gate_name(g.kind)) + " expects " +
                                       std::to_string(target_arity(g.kind)) + " target(s), got " +
                                       std::to_string(g.targets.size())));
      continue;
    }

    bool resolvable = true;
    auto resolve = [&](const QubitRef& ref) -> std::optional<std::size_t> {
      auto idx = c.try_index_of(ref);
      if (idx) return idx;
      resolvable = false;
      if (ref.is_named() && c.find_register(ref.label()) == nullptr) {
        diags.push_back(error_at(gi, "undeclared register '" + std::string(ref.label()) + "'"));
      } else {
        diags.push_back(error_at(gi, "qubit out of range: " + to_string(ref)));
      }
      return std::nullopt;
    };

    std::vector<std::size_t> targets;
    for (const QubitRef& t : g.targets) {
      if (auto idx = resolve(t)) targets.push_back(*idx);
    }
    std::vector<std::size_t> controls;
    for (const Control& ctl : g.controls) {
      if (auto idx = resolve(ctl.qubit)) controls.push_back(*idx);
    }
    if (!resolvable) continue;

    if (g.kind == GateKind::SWAP && targets[0] == targets[1]) {
      diags.push_back(error_at(gi, "swap targets identical: " + to_string(g.targets[0])));
    }
    for (std::size_t i = 0; i < controls.size(); ++i) {
      if (std::find(targets.begin(), targets.end(), controls[i]) != targets.end()) {
        diags.push_back(error_at(gi, "target used as control: " + to_string(g.controls[i].qubit)));
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (controls[j] == controls[i]) {
          diags.push_back(error_at(gi, "duplicate control: " + to_string(g.controls[i].qubit)));
          break;
        }
      }
    }
  }
  return diags;
}

NameResolution resolve_names(const Circuit& c) {
  NameResolution res;
  std::size_t base = 0;
  for (const Register& r : c.registers()) {
    for (std::size_t i = 0; i < r.size; ++i) res.table.push_back(QubitBinding{r.label, i, base + i});
    base += r.size;
  }
  std::vector<Gate> gates;
  gates.reserve(c.size());
  for (const Gate& g : c.gates()) {
    Gate out = g;
    for (QubitRef& t : out.targets) t = QubitRef::at(c.index_of(t));
    for (Control& ctl : out.controls) ctl.qubit = QubitRef::at(c.index_of(ctl.qubit));
    gates.push_back(std::move(out));
  }
  res.circuit = rebuild(c, std::move(gates), c.num_qubits());
  return res;
}

Circuit lower_swaps(const Circuit& c) {
  std::vector<Gate> gates;
  gates.reserve(c.size());
  for (const Gate& g : c.gates()) {
    if (g.kind != GateKind::SWAP) {
      gates.push_back(g);
      continue;
    }
    const QubitRef& p = g.targets[0];
    const QubitRef& q = g.targets[1];
    auto cnot = [&](const QubitRef& ctl, const QubitRef& tgt) {
      std::vector<Control> controls = g.controls;
      controls.push_back(pos(ctl));
      return make_gate(GateKind::X, tgt, std::move(controls));
    };
    gates.push_back(cnot(p, q));
    gates.push_back(cnot(q, p));
    gates.push_back(cnot(p, q));
  }
  return rebuild(c, std::move(gates), c.num_qubits());
}

Circuit lower_negative_controls(const Circuit& c) {
  std::vector<Gate> gates;
  gates.reserve(c.size());
  for (const Gate& g : c.gates()) {
    std::vector<QubitRef> negated;
    Gate positive = g;
    for (Control& ctl : positive.controls) {
      if (ctl.polarity == Polarity::Negative) {
        negated.push_back(ctl.qubit);
        ctl.polarity = Polarity::Positive;
      }
    }
    for (const QubitRef& q : negated) gates.push_back(x(q));
    gates.push_back(std::move(positive));
    for (auto it = negated.rbegin(); it != negated.rend(); ++it) gates.push_back(x(*it));
  }
  return rebuild(c, std::move(gates), c.num_qubits());
}

Circuit expand_multi_controls(const Circuit& c, const PassConfig& cfg) {
  check_config(cfg);
  std::size_t pool = 0;
  for (const Gate& g : c.gates()) {
    if (g.controls.size() > cfg.max_controls) pool = std::max(pool, g.controls.size() - cfg.max_controls);
  }
  if (pool == 0) return c;
  if (!cfg.allow_ancilla_growth) {
    throw Error(ErrorCode::AncillaGrowthDisabled,
                "circuit needs " + std::to_string(pool) + " ancilla qubit(s) but ancilla growth is disabled");
  }

  const std::size_t first_ancilla = c.num_qubits();
  std::vector<Gate> gates;
  for (const Gate& g : c.gates()) {
    if (g.controls.size() <= cfg.max_controls) {
      gates.push_back(g);
      continue;
    }
    std::vector<Control> pending = g.controls;
    std::vector<Gate> compute;
    std::size_t next = first_ancilla;
    while (pending.size() > cfg.max_controls) {
      QubitRef w = QubitRef::at(next++);
      compute.push_back(make_gate(GateKind::X, w, {pending[0], pending[1]}));
      pending.erase(pending.begin(), pending.begin() + 2);
      pending.insert(pending.begin(), pos(w));
    }
    gates.insert(gates.end(), compute.begin(), compute.end());
    Gate reduced = g;
    reduced.controls = std::move(pending);
    gates.push_back(std::move(reduced));
    gates.insert(gates.end(), compute.rbegin(), compute.rend());
  }
  return rebuild(c, std::move(gates), first_ancilla + pool);
}

Circuit lower(const Circuit& c, const PassConfig& cfg) {
  check_config(cfg);
  Circuit out = resolve_names(c).circuit;
  out = lower_swaps(out);
  out = lower_negative_controls(out);
  return expand_multi_controls(out, cfg);
}

QPProgram compile(const Circuit& c, const PassConfig& cfg) {
  check_config(cfg);
  const Diagnostics diags = verify(c);
  if (has_errors(diags)) {
    std::string message = "verify:";
    for (const Diagnostic& d : diags) {
      if (d.severity == Severity::Error) message += " " + to_string(d) + ";";
    }
    throw Error(ErrorCode::CompileError, message);
  }
  auto stage = [](const char* name, auto&& fn) {
    try {
      return fn();
    } catch (const Error& e) {
      throw Error(ErrorCode::CompileError, std::string(name) + ": " + e.what());
    }
  };
  Circuit out = stage("resolve_names", [&] { return resolve_names(c).circuit; });
  out = stage("lower_swaps", [&] { return lower_swaps(out); });
  out = stage("lower_negative_controls", [&] { return lower_negative_controls(out); });
  out = stage("expand_multi_controls", [&] { return expand_multi_controls(out, cfg); });
  return stage("emit", [&] { return to_qp(out, cfg.max_controls); });
}

}  // namespace qforge
