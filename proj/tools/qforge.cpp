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

// qforge: check, compile, simulate, reduce and unit-test circuits.
//
// Exit codes: 0 success, 1 user error (bad input, failed checks or tests),
// 2 internal error.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qforge/error.hpp"
#include "qforge/harness.hpp"
#include "qforge/io.hpp"
#include "qforge/logic_sim.hpp"
#include "qforge/parser.hpp"
#include "qforge/passes.hpp"
#include "qforge/qp.hpp"
#include "qforge/reduction.hpp"
#include "qforge/statevector.hpp"

namespace fs = std::filesystem;
using namespace qforge;

namespace {

constexpr int kUserError = 1;
constexpr int kInternalError = 2;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Accepts `a[3]`, a size-1 register name such as `c`, or `a3`.
std::size_t resolve_qubit_name(const Circuit& c, const std::string& name) {
  if (auto open = name.find('['); open != std::string::npos && name.back() == ']') {
    const std::string offset = name.substr(open + 1, name.size() - open - 2);
    if (all_digits(offset)) {
      if (auto idx = c.try_index_of(QubitRef::named(name.substr(0, open), std::stoull(offset)))) return *idx;
    }
  }
  if (const Register* reg = c.find_register(name); reg != nullptr && reg->size == 1) {
    return *c.register_base(name);
  }
  std::size_t split = name.size();
  while (split > 0 && std::isdigit(static_cast<unsigned char>(name[split - 1]))) --split;
  if (split > 0 && split < name.size()) {
    if (auto idx = c.try_index_of(QubitRef::named(name.substr(0, split), std::stoull(name.substr(split))))) {
      return *idx;
    }
  }
  throw Error(ErrorCode::UnresolvableQubit, "unknown qubit '" + name + "'");
}

std::string register_summary(const Circuit& c, std::uint64_t basis) {
  std::string out;
  for (const auto& reg : c.registers()) {
    const std::uint64_t value = decode_registers(c, basis).at(reg.label);
    if (!out.empty()) out += ' ';
    out += reg.label + "=" + std::to_string(value);
  }
  return out;
}

Circuit load_verified(const std::string& file) {
  Circuit c = read_source_file(file);
  const Diagnostics diags = verify(c);
  for (const Diagnostic& d : diags) std::cerr << file << ": " << to_string(d) << '\n';
  if (has_errors(diags)) throw Error(ErrorCode::CompileError, "verification failed");
  return c;
}

int cmd_check(const std::string& file) {
  const Circuit c = load_verified(file);
  std::cout << file << ": ok (" << c.num_qubits() << " qubits, " << c.size() << " gates)\n";
  return 0;
}

int cmd_compile(const std::string& file, const std::string& out, std::size_t max_controls) {
  if (max_controls < 2) throw Error(ErrorCode::CompileError, "--max-controls must be at least 2");
  const Circuit c = read_source_file(file);
  const QPProgram program = compile(c, PassConfig{max_controls, true});
  write_file_atomic(out, emit_qp(program));
  std::cout << "gates: " << program.gates.size() << "\nqubits: " << program.n_qubits << '\n';
  return 0;
}

int cmd_sim(const std::string& file, const std::string& backend, const std::string& prep_spec, std::size_t top) {
  if (backend != "logic" && backend != "sv") throw Error(ErrorCode::SuiteFormat, "--backend must be logic or sv");
  const Circuit c = resolve_names(load_verified(file)).circuit;
  std::uint64_t prep = 0;
  if (all_digits(prep_spec)) {
    prep = std::stoull(prep_spec);
  } else if (!prep_spec.empty()) {
    prep = prepare_basis(c, parse_assignments(prep_spec));
  }

  if (backend == "logic") {
    const std::uint64_t out = run_logic(c, prep);
    std::cout << (c.registers().empty() ? "basis=" + std::to_string(out) : register_summary(c, out)) << '\n';
    return 0;
  }

  const StateVector state = run(c, prep);
  const std::vector<double> probs = probabilities(state);
  std::vector<std::size_t> order(probs.size());
  std::iota(order.begin(), order.end(), 0);
  const std::size_t k = std::min(top, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                    [&](std::size_t a, std::size_t b) { return probs[a] > probs[b] || (probs[a] == probs[b] && a < b); });
  std::cout << std::setprecision(10);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t idx = order[i];
    if (probs[idx] == 0.0) break;
    std::cout << "|" << BasisState(c.num_qubits(), idx).to_bitstring() << "> index=" << idx
              << " amp=" << state[idx].real() << (state[idx].imag() < 0 ? "" : "+") << state[idx].imag() << "i"
              << " p=" << probs[idx];
    if (!c.registers().empty()) std::cout << "  " << register_summary(c, idx);
    std::cout << '\n';
  }
  return 0;
}

int cmd_reduce(const std::string& file, const std::string& qubit_list, const std::string& value_list,
               const std::string& out_dir, std::size_t semantic_cap) {
  const Circuit source = load_verified(file);
  const Circuit c = resolve_names(source).circuit;
  const std::vector<std::string> names = split_list(qubit_list);
  std::vector<std::size_t> qubits;
  for (const std::string& n : names) qubits.push_back(resolve_qubit_name(c, n));
  std::vector<std::vector<bool>> values;
  for (const std::string& v : split_list(value_list)) {
    values.push_back(parse_bits(v));
    if (values.back().size() != qubits.size()) {
      throw Error(ErrorCode::InvalidSpecialization,
                  "value '" + v + "' has " + std::to_string(v.size()) + " bits for " +
                      std::to_string(qubits.size()) + " qubits");
    }
  }
  if (values.empty()) throw Error(ErrorCode::InvalidSpecialization, "--values is empty");

  const std::vector<KernelOutcome> outcomes = generate_kernels(c, qubits, values, ReductionOptions{semantic_cap});
  bool failed = false;
  for (const KernelOutcome& o : outcomes) {
    if (!o.ok()) {
      std::cerr << "value " << format_bits(o.value) << ": " << o.error << '\n';
      failed = true;
    }
    for (const std::string& w : o.warnings) std::cerr << "value " << format_bits(o.value) << ": warning: " << w << '\n';
  }
  if (failed) return kUserError;

  const std::string base = fs::path(file).stem().string();
  fs::create_directories(out_dir);
  std::ostringstream manifest;
  manifest << "# qubits " << qubit_list << '\n';
  for (const KernelOutcome& o : outcomes) {
    const std::string value = format_bits(o.value);
    const std::string name = base + ".k" + value + ".fqt";
    std::ostringstream text;
    text << "# " << qubit_list << " = " << value << " (" << to_string(o.kernel->method) << ")\n";
    text << print_source(o.kernel->circuit);
    write_file_atomic(fs::path(out_dir) / name, text.str());
    manifest << value << ' ' << name << ' ' << to_string(o.kernel->method) << '\n';
    std::cout << value << " -> " << name << " (" << to_string(o.kernel->method) << ", "
              << o.kernel->circuit.num_qubits() << " qubits, " << o.kernel->circuit.size() << " gates)\n";
  }
  write_file_atomic(fs::path(out_dir) / (base + ".manifest"), manifest.str());
  return 0;
}

int cmd_test(const std::string& suite_file) {
  const TestReport report = run_suite(read_suite_file(suite_file));
  for (const CaseResult& r : report.results) {
    std::cout << to_string(r.verdict) << ' ' << r.name;
    if (r.verdict == Verdict::Fail) std::cout << ": expected " << r.expected << ", actual " << r.actual;
    if (r.verdict == Verdict::Error) std::cout << ": " << r.message;
    std::cout << '\n';
  }
  std::cout << report.passed << "/" << report.results.size() << " passed";
  if (report.failed + report.errors > 0) std::cout << " (" << report.failed << " failed, " << report.errors << " errors)";
  std::cout << '\n';
  return report.all_passed() ? 0 : kUserError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qforge: quantum circuit compiler, simulators and qubit reduction"};
  app.require_subcommand(1);

  std::string file;
  std::string out;
  std::size_t max_controls = 2;
  std::string backend = "logic";
  std::string prep;
  std::size_t top = 8;
  std::string qubit_list;
  std::string value_list;
  std::size_t semantic_cap = 20;
  std::string suite;

  auto* check = app.add_subcommand("check", "Parse and verify a circuit");
  check->add_option("file", file, "Circuit source (.fqt)")->required();

  auto* comp = app.add_subcommand("compile", "Lower a circuit and write a QP file");
  comp->add_option("file", file, "Circuit source (.fqt)")->required();
  comp->add_option("-o,--output", out, "Output QP file")->required();
  comp->add_option("--max-controls", max_controls, "Architecture control limit (>= 2)")->check(CLI::Range(2, 64));

  auto* sim = app.add_subcommand("sim", "Simulate a circuit from a basis state");
  sim->add_option("file", file, "Circuit source (.fqt)")->required();
  sim->add_option("--backend", backend, "logic or sv")->check(CLI::IsMember({"logic", "sv"}));
  sim->add_option("--prep", prep, "reg=value,... or a basis index");
  sim->add_option("--top", top, "Amplitudes to print for sv")->check(CLI::PositiveNumber);

  auto* reduce = app.add_subcommand("reduce", "Specialize qubits and write one kernel per value");
  reduce->add_option("file", file, "Circuit source (.fqt)")->required();
  reduce->add_option("--qubits", qubit_list, "Comma-separated qubits, e.g. a3,a2,c")->required();
  reduce->add_option("--values", value_list, "Comma-separated bit strings, one bit per qubit")->required();
  reduce->add_option("-o,--output", out, "Output directory")->required();
  reduce->add_option("--semantic-cap", semantic_cap, "Largest free-qubit count for the semantic path");

  auto* test = app.add_subcommand("test", "Run a .qtest suite");
  test->add_option("suite", suite, "Suite file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUserError;
  }

  try {
    if (*check) return cmd_check(file);
    if (*comp) return cmd_compile(file, out, max_controls);
    if (*sim) return cmd_sim(file, backend, prep, top);
    if (*reduce) return cmd_reduce(file, qubit_list, value_list, out, semantic_cap);
    if (*test) return cmd_test(suite);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUserError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}
