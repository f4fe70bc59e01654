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

#include "qforge/harness.hpp"

#include <cctype>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "qforge/error.hpp"
#include "qforge/io.hpp"
#include "qforge/logic_sim.hpp"
#include "qforge/parser.hpp"
#include "qforge/passes.hpp"
#include "qforge/statevector.hpp"

namespace qforge {

namespace {

std::uint64_t parse_uint(std::string_view text) {
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'b' || text[1] == 'B')) {
    base = 2;
    text.remove_prefix(2);
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, base);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::SuiteFormat, "bad integer '" + std::string(text) + "'");
  }
  return value;
}

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || used == 0) throw Error(ErrorCode::SuiteFormat, "bad number '" + text + "'");
  return v;
}

BasisState prepare_state(const Circuit& c, const std::map<std::string, std::uint64_t>& prep) {
  BasisState state(c.num_qubits());
  for (const auto& [label, value] : prep) {
    const Register* reg = c.find_register(label);
    if (reg == nullptr) throw Error(ErrorCode::UndeclaredRegister, "unknown register '" + label + "'");
    if (reg->size < 64 && (value >> reg->size) != 0) {
      throw Error(ErrorCode::BasisOutOfRange, "value " + std::to_string(value) + " does not fit register '" +
                                                  label + "' of " + std::to_string(reg->size) + " qubits");
    }
    state.set_field(*c.register_base(label), std::min<std::size_t>(reg->size, 64), value);
  }
  return state;
}

std::map<std::string, std::uint64_t> decode_state(const Circuit& c, const BasisState& state) {
  std::map<std::string, std::uint64_t> out;
  std::size_t base = 0;
  for (const Register& r : c.registers()) {
    out[r.label] = state.field(base, std::min<std::size_t>(r.size, 64));
    base += r.size;
  }
  return out;
}

std::string describe(const std::map<std::string, std::uint64_t>& expected,
                     const std::map<std::string, std::uint64_t>& actual) {
  std::string out;
  for (const auto& [label, value] : expected) {
    if (!out.empty()) out += ",";
    auto it = actual.find(label);
    out += label + "=" + (it == actual.end() ? std::string("?") : std::to_string(it->second));
  }
  return out;
}

std::string describe(const std::map<std::string, std::uint64_t>& values) { return describe(values, values); }

std::string format_amp(std::complex<double> a) {
  std::ostringstream out;
  out.precision(12);
  out << a.real() << (a.imag() < 0 ? "" : "+") << a.imag() << "i";
  return out.str();
}

CaseResult check_registers(CaseResult result, const TestCase& tc, const std::map<std::string, std::uint64_t>& actual) {
  for (const auto& [label, value] : tc.expect) {
    auto it = actual.find(label);
    if (it == actual.end()) throw Error(ErrorCode::UndeclaredRegister, "unknown register '" + label + "'");
    if (it->second != value) {
      result.verdict = Verdict::Fail;
      result.expected = describe(tc.expect);
      result.actual = describe(tc.expect, actual);
      return result;
    }
  }
  return result;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Error: return "ERROR";
  }
  return "?";
}

std::map<std::string, std::uint64_t> parse_assignments(std::string_view text) {
  std::map<std::string, std::uint64_t> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    text = comma == std::string_view::npos ? std::string_view() : text.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw Error(ErrorCode::SuiteFormat, "expected reg=value, got '" + std::string(item) + "'");
    }
    out[std::string(item.substr(0, eq))] = parse_uint(item.substr(eq + 1));
  }
  return out;
}

std::uint64_t prepare_basis(const Circuit& c, const std::map<std::string, std::uint64_t>& prep) {
  if (c.num_qubits() > 64) throw Error(ErrorCode::BasisOutOfRange, "basis index needs more than 64 bits");
  return prepare_state(c, prep).to_uint64();
}

std::map<std::string, std::uint64_t> decode_registers(const Circuit& c, std::uint64_t basis) {
  return decode_state(c, BasisState(c.num_qubits(), basis));
}

CaseResult run_case(const TestCase& tc) {
  CaseResult result;
  result.name = tc.name;
  try {
    const Diagnostics diags = verify(tc.circuit);
    if (has_errors(diags)) throw Error(ErrorCode::CompileError, "verify: " + to_string(diags.front()));
    Circuit circuit = resolve_names(tc.circuit).circuit;
    if (tc.lower) circuit = lower(circuit, PassConfig{});

    const BasisState input = prepare_state(circuit, tc.prep);
    if (tc.backend == Backend::Logic) {
      if (!tc.amplitudes.empty()) {
        throw Error(ErrorCode::SuiteFormat, "amplitude expectations need the sv backend");
      }
      if (tc.expect.empty()) throw Error(ErrorCode::SuiteFormat, "case has no expectations");
      return check_registers(result, tc, decode_state(circuit, run_logic(circuit, input)));
    }

    if (tc.expect.empty() && tc.amplitudes.empty()) throw Error(ErrorCode::SuiteFormat, "case has no expectations");
    const StateVector state = run(circuit, input.to_uint64());
    if (!tc.expect.empty()) {
      const auto amps = state.amplitudes();
      std::size_t best = 0;
      for (std::size_t i = 1; i < amps.size(); ++i) {
        if (std::norm(amps[i]) > std::norm(amps[best])) best = i;
      }
      if (std::abs(std::norm(amps[best]) - 1.0) > 1e-9) {
        result.verdict = Verdict::Fail;
        result.expected = describe(tc.expect);
        result.actual = "superposition (max probability " + std::to_string(std::norm(amps[best])) + ")";
        return result;
      }
      result = check_registers(result, tc, decode_state(circuit, BasisState(circuit.num_qubits(), best)));
      if (result.verdict != Verdict::Pass) return result;
    }
    if (!tc.amplitudes.empty()) {
      double floor_tol = tc.amplitudes.front().tolerance;
      std::vector<bool> listed(state.size(), false);
      for (const AmplitudeExpectation& e : tc.amplitudes) {
        floor_tol = std::min(floor_tol, e.tolerance);
        if (e.index >= state.size()) throw Error(ErrorCode::BasisOutOfRange, "amplitude index out of range");
        listed[e.index] = true;
        if (std::abs(state[e.index] - e.amplitude) > e.tolerance) {
          result.verdict = Verdict::Fail;
          result.expected = "amp[" + std::to_string(e.index) + "]=" + format_amp(e.amplitude);
          result.actual = "amp[" + std::to_string(e.index) + "]=" + format_amp(state[e.index]);
          return result;
        }
      }
      for (std::size_t i = 0; i < state.size(); ++i) {
        if (!listed[i] && std::abs(state[i]) >= floor_tol) {
          result.verdict = Verdict::Fail;
          result.expected = "amp[" + std::to_string(i) + "]=0";
          result.actual = "amp[" + std::to_string(i) + "]=" + format_amp(state[i]);
          return result;
        }
      }
    }
  } catch (const Error& e) {
    result.verdict = Verdict::Error;
    result.message = std::string(to_string(e.code())) + ": " + e.what();
  }
  return result;
}

TestReport run_suite(const std::vector<TestCase>& suite) {
  TestReport report;
  for (const TestCase& tc : suite) {
    CaseResult r = run_case(tc);
    switch (r.verdict) {
      case Verdict::Pass: ++report.passed; break;
      case Verdict::Fail: ++report.failed; break;
      case Verdict::Error: ++report.errors; break;
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

std::vector<TestCase> parse_suite(std::string_view text, const std::filesystem::path& base_dir) {
  std::vector<TestCase> cases;
  std::map<std::string, Circuit> loaded;
  std::optional<Circuit> circuit;
  Backend backend = Backend::Logic;
  bool lower_first = false;

  std::istringstream lines{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;

    auto fail = [&](const std::string& msg) -> Error {
      return Error(ErrorCode::SuiteFormat, "line " + std::to_string(line_no) + ": " + msg);
    };
    try {
      if (tok[0] == "circuit") {
        if (tok.size() != 2) throw fail("usage: circuit <path>");
        const std::string path = (base_dir / tok[1]).string();
        auto it = loaded.find(path);
        if (it == loaded.end()) it = loaded.emplace(path, read_source_file(path)).first;
        circuit = it->second;
      } else if (tok[0] == "backend") {
        if (tok.size() != 2 || (tok[1] != "logic" && tok[1] != "sv")) throw fail("usage: backend logic|sv");
        backend = tok[1] == "logic" ? Backend::Logic : Backend::StateVector;
      } else if (tok[0] == "lower") {
        if (tok.size() != 2 || (tok[1] != "on" && tok[1] != "off")) throw fail("usage: lower on|off");
        lower_first = tok[1] == "on";
      } else if (tok[0] == "case") {
        if (tok.size() < 2) throw fail("case needs a name");
        if (!circuit) throw fail("case before any circuit line");
        TestCase tc;
        tc.name = tok[1];
        tc.circuit = *circuit;
        tc.backend = backend;
        tc.lower = lower_first;
        for (std::size_t i = 2; i < tok.size(); i += 2) {
          if (i + 1 >= tok.size()) throw fail("missing value after '" + tok[i] + "'");
          if (tok[i] == "prep") {
            tc.prep = parse_assignments(tok[i + 1]);
          } else if (tok[i] == "expect") {
            tc.expect = parse_assignments(tok[i + 1]);
          } else {
            throw fail("unknown case field '" + tok[i] + "'");
          }
        }
        cases.push_back(std::move(tc));
      } else if (tok[0] == "expect" && tok.size() >= 2 && tok[1] == "amp") {
        if (cases.empty()) throw fail("amplitude expectation before any case");
        if (tok.size() != 7 || tok[5] != "tol") throw fail("usage: expect amp <index> <re> <im> tol <t>");
        AmplitudeExpectation e;
        e.index = parse_uint(tok[2]);
        e.amplitude = {parse_double(tok[3]), parse_double(tok[4])};
        e.tolerance = parse_double(tok[6]);
        if (!(e.tolerance > 0.0)) throw fail("tolerance must be positive");
        cases.back().amplitudes.push_back(e);
      } else {
        throw fail("unknown directive '" + tok[0] + "'");
      }
    } catch (const SyntaxError& e) {
      throw Error(ErrorCode::SuiteFormat, "line " + std::to_string(line_no) + ": circuit: " + e.what());
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SuiteFormat && std::string_view(e.what()).starts_with("line ")) throw;
      throw fail(e.what());
    }
  }
  return cases;
}

std::vector<TestCase> read_suite_file(const std::filesystem::path& path) {
  return parse_suite(read_file(path), path.parent_path());
}

}  // namespace qforge
